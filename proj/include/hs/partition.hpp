#pragma once

#include <string>
#include <vector>

namespace hs {

// Weakly decreasing positive parts.
using Partition = std::vector<int>;

Partition normalize_partition(std::vector<int> parts);  // sort descending, drop zeros
int partition_size(const Partition& p);
Partition transpose(const Partition& p);
// Partial sums of mu bounded by those of lam; throws InputError on size mismatch.
bool dominance_leq(const Partition& mu, const Partition& lam);
std::vector<Partition> partitions_of(int n);
std::string partition_str(const Partition& p);
Partition parse_partition(const std::string& s);

}  // namespace hs
