#pragma once

#include <cstddef>
#include <cstdint>

namespace palab {

// Size guards are configuration, not constants.  Every enumeration entry
// point takes a Limits value; the CLI overrides fields from flags and from
// PALAB_-prefixed environment variables.
struct Limits {
  // Cap on s^arity entries for any single operation table.
  std::size_t table_entry_max = 10'000'000;
  // Topology enumeration cap on the carrier size (355 topologies at 4,
  // 6942 at 5).
  int topology_s_max = 4;
  // Congruence enumeration cap; Bell(8) = 4140 partitions.
  int congruence_s_max = 8;
  // Structure-search candidate bound s^((n+1)*s^n), rejected above this.
  std::uint64_t search_budget = 1'000'000'000;
};

}  // namespace palab
