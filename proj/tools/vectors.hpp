#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "msdmv/session.hpp"

namespace msdmv::cli {

struct VectorCheck {
  std::string scheme;
  std::string set;
  std::string label;
  std::string expected;
  std::string actual;
  bool pass = false;
};

// Replays the worked examples for one scheme and set ("paper-ex1" or
// "paper-ex2"). The combined scheme replays its pairing and Z_p^* halves.
std::vector<VectorCheck> paper_vectors(session::SchemeTag scheme, std::string_view set);

}  // namespace msdmv::cli
