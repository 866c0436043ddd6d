#include "hs/partition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "hs/errors.hpp"
#include "hs/integer.hpp"

namespace hs {

Partition normalize_partition(std::vector<int> parts) {
    for (int x : parts)
        if (x < 0) throw InputError("negative part in partition");
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return parts;
}

int partition_size(const Partition& p) {
    int s = 0;
    for (int x : p) s += x;
    return s;
}

Partition transpose(const Partition& p) {
    Partition t;
    if (p.empty()) return t;
    for (int k = 1; k <= p[0]; ++k) {
        int c = 0;
        for (int x : p)
            if (x >= k) ++c;
        t.push_back(c);
    }
    return t;
}

bool dominance_leq(const Partition& mu, const Partition& lam) {
    if (partition_size(mu) != partition_size(lam)) throw InputError("dominance order needs partitions of the same size");
    int a = 0, b = 0;
    std::size_t len = std::max(mu.size(), lam.size());
    for (std::size_t i = 0; i < len; ++i) {
        a += i < mu.size() ? mu[i] : 0;
        b += i < lam.size() ? lam[i] : 0;
        if (a > b) return false;
    }
    return true;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int rem, int maxp) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = std::min(rem, maxp); k >= 1; --k) {
            cur.push_back(k);
            rec(rem - k, k);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::string partition_str(const Partition& p) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << ')';
    return os.str();
}

Partition parse_partition(const std::string& s) {
    Vec v = parse_vec(s);
    std::vector<int> parts(v.begin(), v.end());
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1]) throw InputError("partition parts must be weakly decreasing: " + s);
    return normalize_partition(parts);
}

}  // namespace hs
