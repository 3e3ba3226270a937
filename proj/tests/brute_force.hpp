#ifndef WITTPATHS_TESTS_BRUTE_FORCE_HPP
#define WITTPATHS_TESTS_BRUTE_FORCE_HPP

// Test-only reference counts built from plain exhaustive enumeration. Nothing
// here calls into the library's enumeration or formula code.

#include <cstdint>
#include <functional>
#include <vector>

namespace brute
{

struct StringCounts
{
    std::uint64_t reduced_strings = 0;  // letter strings, all starting positions
    std::uint64_t nonperiodic_classes = 0;
};

// Letter strings of length N over {+1,-1,...,+r,-r} with m_i letters of index
// i and no letter cyclically followed by its inverse.
inline StringCounts reduced_strings(const std::vector<unsigned> &m)
{
    const std::size_t r = m.size();
    unsigned n = 0;
    for (unsigned x : m) {
        n += x;
    }
    StringCounts out;
    std::vector<int> s(n);
    std::vector<unsigned> used(r, 0);
    std::function<void(unsigned)> rec = [&](unsigned pos) {
        if (pos == n) {
            if (n > 1 && s[n - 1] == -s[0]) {
                return;
            }
            ++out.reduced_strings;
            for (unsigned shift = 1; shift < n; ++shift) {
                if (n % shift != 0) {
                    continue;
                }
                bool same = true;
                for (unsigned k = 0; k < n && same; ++k) {
                    same = s[k] == s[(k + shift) % n];
                }
                if (same) {
                    return;
                }
            }
            ++out.nonperiodic_classes; // divided by n below
            return;
        }
        for (std::size_t i = 0; i < r; ++i) {
            if (used[i] == m[i]) {
                continue;
            }
            for (int sign : {1, -1}) {
                int letter = sign * static_cast<int>(i + 1);
                if (pos > 0 && s[pos - 1] == -letter) {
                    continue;
                }
                s[pos] = letter;
                ++used[i];
                rec(pos + 1);
                --used[i];
            }
        }
    };
    rec(0);
    out.nonperiodic_classes /= n;
    return out;
}

// Set partitions of {1..n} into exactly k blocks, by restricted growth strings.
inline std::uint64_t set_partitions(unsigned n, unsigned k)
{
    std::uint64_t count = 0;
    std::vector<unsigned> a(n, 0);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned pos, unsigned blocks) {
        if (pos == n) {
            count += blocks == k ? 1 : 0;
            return;
        }
        for (unsigned b = 0; b <= blocks && b < k; ++b) {
            a[pos] = b;
            rec(pos + 1, b == blocks ? blocks + 1 : blocks);
        }
    };
    if (n > 0) {
        a[0] = 0;
        rec(1, 1);
    }
    return count;
}

// Maps from an n-set onto an r-set.
inline std::uint64_t surjections(unsigned n, unsigned r)
{
    std::uint64_t count = 0;
    std::vector<unsigned> hits(r, 0);
    std::function<void(unsigned)> rec = [&](unsigned pos) {
        if (pos == n) {
            for (unsigned h : hits) {
                if (h == 0) {
                    return;
                }
            }
            ++count;
            return;
        }
        for (unsigned j = 0; j < r; ++j) {
            ++hits[j];
            rec(pos + 1);
            --hits[j];
        }
    };
    rec(0);
    return count;
}

// Sequences of length a over {1..r} with cyclically distinct neighbours;
// `full` restricts to sequences that use every symbol.
inline std::uint64_t cyclic_sequences(unsigned r, unsigned a, bool full)
{
    std::uint64_t count = 0;
    std::vector<unsigned> s(a);
    std::function<void(unsigned)> rec = [&](unsigned pos) {
        if (pos == a) {
            if (s[a - 1] == s[0]) {
                return;
            }
            if (full) {
                std::vector<bool> seen(r, false);
                for (unsigned x : s) {
                    seen[x] = true;
                }
                for (bool b : seen) {
                    if (!b) {
                        return;
                    }
                }
            }
            ++count;
            return;
        }
        for (unsigned x = 0; x < r; ++x) {
            if (pos > 0 && s[pos - 1] == x) {
                continue;
            }
            s[pos] = x;
            rec(pos + 1);
        }
    };
    rec(0);
    return count;
}

// All multidegrees with r entries >= 1 and total <= max_total.
inline std::vector<std::vector<unsigned>> multidegrees(unsigned r, unsigned max_total)
{
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> m(r, 1);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned used) {
        if (i == r) {
            out.push_back(m);
            return;
        }
        for (unsigned v = 1; used + v + (r - i - 1) <= max_total; ++v) {
            m[i] = v;
            rec(i + 1, used + v);
        }
    };
    rec(0, 0);
    return out;
}

} // namespace brute

#endif
