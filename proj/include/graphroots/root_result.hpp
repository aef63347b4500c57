#pragma once

#include <optional>
#include <string_view>

#include "graphroots/graph.hpp"

namespace graphroots {

enum class Verdict { kYes, kNo };

/// Why a recognizer said NO. kSquareCheckFailed means the final verification
/// rejected a reconstructed root, which indicates a bug rather than an input
/// property.
enum class Reason {
  kTooManyCliques,
  kCondI,
  kCondII,
  kCondIII,
  kCondIV,
  kCondV,
  kSquareCheckFailed,
  kC4Found,
  kNoCandidate,
};

std::string_view to_string(Verdict verdict);
std::string_view to_string(Reason reason);

struct RootResult {
  Verdict verdict = Verdict::kNo;
  std::optional<Graph> root;         // present iff YES
  std::optional<Girth> root_girth;   // present iff YES
  std::optional<Reason> reason;      // present iff NO

  bool yes() const { return verdict == Verdict::kYes; }

  static RootResult accept(Graph root);
  static RootResult reject(Reason why);
};

}  // namespace graphroots
