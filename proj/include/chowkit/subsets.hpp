#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "chowkit/errors.hpp"

namespace chowkit {

// Subsets of the ground set {1..n} are kept as sorted 1-based label vectors
// throughout; matrix column indices are 0-based and converted at the call
// site.
using Subset = std::vector<int>;

inline std::vector<Subset> k_subsets(int n, int k) {
    std::vector<Subset> out;
    if (k < 0 || k > n) return out;
    Subset cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i + 1;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i + 1) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

inline Subset complement(const Subset& s, int n) {
    Subset out;
    out.reserve(n - s.size());
    std::size_t pos = 0;
    for (int i = 1; i <= n; ++i) {
        if (pos < s.size() && s[pos] == i) {
            ++pos;
        } else {
            out.push_back(i);
        }
    }
    return out;
}

inline bool contains(const Subset& s, int x) {
    return std::binary_search(s.begin(), s.end(), x);
}

// Sign of the permutation (s_1..s_k, complement) of (1..n).
inline int shuffle_sign(const Subset& s, int n) {
    long inversions = 0;
    Subset rest = complement(s, n);
    for (int a : s) {
        // elements of the complement smaller than a come later
        inversions += std::lower_bound(rest.begin(), rest.end(), a) - rest.begin();
    }
    return inversions % 2 == 0 ? 1 : -1;
}

inline std::string subset_key(const Subset& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    return out;
}

inline Subset parse_subset_key(const std::string& key) {
    Subset out;
    if (key.empty()) return out;
    std::size_t start = 0;
    while (start <= key.size()) {
        auto comma = key.find(',', start);
        std::string tok = key.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw BadParams("bad subset key '" + key + "'");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (!std::is_sorted(out.begin(), out.end()) ||
        std::adjacent_find(out.begin(), out.end()) != out.end()) {
        throw BadParams("subset key not strictly increasing: '" + key + "'");
    }
    return out;
}

} // namespace chowkit
