#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gadic/basis.hpp"

namespace gadic {

/// Everything a CLI run needs. Text form is flat `key = value` lines, `#` comments:
///
///     sequence = prefix=[];period=[2]
///     partition = h=2;prefix=[];period=[0,0,1,1]
///     t = 2
///     window = 5000
///     budget = 20
///     witnesses = 3
///     samples = 10000
///     seed = 1
struct RunConfig {
  GadicSequence seq = GadicSequence::constant(2);
  PartitionSpec partition{2, {}, {0, 0, 1, 1}};
  std::size_t t = 2;
  std::size_t window = 5000;
  std::size_t budget = 20;     // members K for minimality batches
  std::size_t witnesses = 3;   // M-choices W per member
  std::size_t samples = 10000;
  std::uint64_t seed = 1;

  BasisSpec basis() const { return {seq, partition}; }

  std::string serialize() const;
  /// Throws ParseError on unknown keys or malformed values and ValidationError
  /// on quotients < 2 or colors outside [0, h-1].
  static RunConfig parse(std::string_view text);
  static RunConfig load(const std::string& path);

  /// Throws ParseError for an unknown name.
  static RunConfig preset(std::string_view name);
  static std::vector<std::string> preset_names();

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

}  // namespace gadic
