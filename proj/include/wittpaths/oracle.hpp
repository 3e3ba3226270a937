#ifndef WITTPATHS_ORACLE_HPP
#define WITTPATHS_ORACLE_HPP

// Brute-force ground truth for the closed-form counters.
//
// A closed path on the bouquet is a word D_{j1}^{e1} ... D_{jl}^{el}: a cyclic
// list of blocks with cyclically distinct adjacent edges and nonzero signed
// exponents. Paths are rotated letter by letter, so a word also carries a
// phase: the offset of the starting letter inside its first block. Every
// (block list, phase) pair is a distinct letter-level word, which is what
// N * F counts. Rotation classes are identified through a canonical block
// rotation; inversions are never merged.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "numth.hpp"
#include "path_counts.hpp"

namespace wittpaths
{

struct Block
{
    unsigned edge;
    int exponent;

    friend bool operator==(const Block &, const Block &) = default;
};

class Word
{
public:
    Word(std::vector<Block> blocks, unsigned phase = 0) : blocks_(std::move(blocks)), phase_(phase)
    {
        if (blocks_.empty()) {
            throw std::invalid_argument("word needs at least one block");
        }
        for (std::size_t k = 0; k < blocks_.size(); ++k) {
            if (blocks_[k].edge == 0 || blocks_[k].exponent == 0) {
                throw std::invalid_argument("blocks need an edge index >= 1 and a nonzero exponent");
            }
            if (blocks_.size() >= 2 && blocks_[k].edge == blocks_[(k + 1) % blocks_.size()].edge) {
                throw std::invalid_argument("cyclically adjacent blocks must use distinct edges");
            }
        }
        if (phase_ >= static_cast<unsigned>(std::abs(blocks_.front().exponent))) {
            throw std::invalid_argument("phase must lie inside the first block");
        }
    }

    const std::vector<Block> &blocks() const noexcept
    {
        return blocks_;
    }
    unsigned phase() const noexcept
    {
        return phase_;
    }

    /// l: number of blocks.
    std::size_t block_count() const noexcept
    {
        return blocks_.size();
    }

    /// s: number of negative exponents.
    std::size_t negative_count() const noexcept
    {
        return static_cast<std::size_t>(
            std::count_if(blocks_.begin(), blocks_.end(), [](const Block &b) { return b.exponent < 0; }));
    }

    /// N: path length.
    unsigned length() const noexcept
    {
        unsigned n = 0;
        for (const Block &b : blocks_) {
            n += static_cast<unsigned>(std::abs(b.exponent));
        }
        return n;
    }

    /// Traversal count of each edge 1..r.
    std::vector<unsigned> edge_counts(unsigned r) const
    {
        std::vector<unsigned> out(r, 0);
        for (const Block &b : blocks_) {
            if (b.edge > r) {
                throw std::out_of_range("edge index exceeds alphabet size");
            }
            out[b.edge - 1] += static_cast<unsigned>(std::abs(b.exponent));
        }
        return out;
    }

    /// Signed letters (+edge or -edge), starting at the phase offset.
    std::vector<int> letters() const
    {
        std::vector<int> out;
        for (const Block &b : blocks_) {
            int letter = b.exponent > 0 ? static_cast<int>(b.edge) : -static_cast<int>(b.edge);
            out.insert(out.end(), static_cast<std::size_t>(std::abs(b.exponent)), letter);
        }
        std::rotate(out.begin(), out.begin() + phase_, out.end());
        return out;
    }

    std::string to_string() const
    {
        std::ostringstream os;
        for (std::size_t k = 0; k < blocks_.size(); ++k) {
            os << (k ? " " : "") << 'D' << blocks_[k].edge << '^' << (blocks_[k].exponent > 0 ? "+" : "")
               << blocks_[k].exponent;
        }
        if (phase_ != 0) {
            os << " @" << phase_;
        }
        return os.str();
    }

    friend bool operator==(const Word &, const Word &) = default;

private:
    std::vector<Block> blocks_;
    unsigned phase_;
};

/// Largest g such that the word is a g-fold repetition of a shorter word.
/// A single block D^e is the |e|-fold repetition of D^(+-1).
inline unsigned word_period(const Word &w)
{
    const auto &b = w.blocks();
    const std::size_t l = b.size();
    if (l == 1) {
        return static_cast<unsigned>(std::abs(b.front().exponent));
    }
    for (std::size_t p = 1; p <= l; ++p) {
        if (l % p != 0) {
            continue;
        }
        bool repeats = true;
        for (std::size_t k = 0; k < l && repeats; ++k) {
            repeats = b[k] == b[(k + p) % l];
        }
        if (repeats) {
            return static_cast<unsigned>(l / p);
        }
    }
    return 1;
}

namespace detail
{

// Total order on blocks: edge ascending, positive before negative, then |e|.
inline std::uint64_t block_key(const Block &b)
{
    const std::uint64_t negative = b.exponent < 0 ? 1 : 0;
    const std::uint64_t magnitude = static_cast<std::uint64_t>(std::abs(b.exponent));
    return (static_cast<std::uint64_t>(b.edge) << 40) | (negative << 32) | magnitude;
}

// Index of the lexicographically least rotation of `keys`.
template <typename T>
std::size_t least_rotation(std::span<const T> keys)
{
    const std::size_t n = keys.size();
    std::size_t best = 0;
    for (std::size_t start = 1; start < n; ++start) {
        for (std::size_t k = 0; k < n; ++k) {
            const T &a = keys[(start + k) % n];
            const T &b = keys[(best + k) % n];
            if (a != b) {
                if (a < b) {
                    best = start;
                }
                break;
            }
        }
    }
    return best;
}

// True when `s` is strictly smaller than each of its proper rotations,
// i.e. it is the canonical representative of a nonperiodic necklace.
template <typename T>
bool is_lyndon(std::span<const T> s)
{
    const std::size_t n = s.size();
    for (std::size_t start = 1; start < n; ++start) {
        for (std::size_t k = 0; k < n; ++k) {
            const T &a = s[(start + k) % n];
            const T &b = s[k];
            if (a != b) {
                if (a < b) {
                    return false;
                }
                break;
            }
            if (k + 1 == n) {
                return false; // rotation equals s: periodic
            }
        }
    }
    return true;
}

} // namespace detail

/// Canonical representative of a word's rotation class: least block rotation
/// under the block order, with phase 0.
inline Word canonical_form(const Word &w)
{
    std::vector<std::uint64_t> keys;
    keys.reserve(w.block_count());
    for (const Block &b : w.blocks()) {
        keys.push_back(detail::block_key(b));
    }
    std::size_t shift = detail::least_rotation<std::uint64_t>(keys);
    std::vector<Block> rotated(w.blocks());
    std::rotate(rotated.begin(), rotated.begin() + static_cast<std::ptrdiff_t>(shift), rotated.end());
    return Word(std::move(rotated), 0);
}

struct OracleLimits
{
    unsigned max_total = 12;
};

inline void check_enumeration_bound(const MultiDegree &m, const OracleLimits &limits)
{
    if (m.total() > limits.max_total) {
        throw ResourceLimitError("enumeration of N = " + std::to_string(m.total()) + " exceeds bound " +
                                 std::to_string(limits.max_total));
    }
}

/// Streams every word (all block lists, signs and letter phases) with
/// multidegree m. Built as: cyclic edge sequence, compositions of each m_i
/// over its occurrences, a sign per block, then a starting letter.
template <typename Visitor>
void for_each_block_word(const MultiDegree &m, Visitor &&visit)
{
    const unsigned r = static_cast<unsigned>(m.size());
    if (r == 1) {
        const int e = static_cast<int>(m[0]);
        visit(Word({{1, e}}));
        visit(Word({{1, -e}}));
        return;
    }
    const unsigned n = m.total();
    for (unsigned l = r; l <= n; ++l) {
        for_each_cyclic_sequence(r, l, [&](std::span<const unsigned> seq) {
            std::vector<unsigned> t(r, 0);
            for (unsigned j : seq) {
                ++t[j - 1];
            }
            for (unsigned c = 0; c < r; ++c) {
                if (t[c] == 0 || t[c] > m[c]) {
                    return;
                }
            }
            std::vector<std::vector<std::vector<unsigned>>> splits(r);
            for (unsigned c = 0; c < r; ++c) {
                splits[c] = compositions(m[c], t[c]);
            }
            // Positions of each edge's occurrences in the sequence.
            std::vector<std::vector<std::size_t>> slots(r);
            for (std::size_t k = 0; k < seq.size(); ++k) {
                slots[seq[k] - 1].push_back(k);
            }
            std::vector<unsigned> magnitude(l);
            std::vector<Block> blocks(l);
            std::function<void(unsigned)> choose = [&](unsigned c) {
                if (c == r) {
                    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << l); ++mask) {
                        for (unsigned k = 0; k < l; ++k) {
                            int e = static_cast<int>(magnitude[k]);
                            blocks[k] = Block{seq[k], ((mask >> k) & 1u) ? -e : e};
                        }
                        visit(Word(blocks));
                    }
                    return;
                }
                for (const auto &split : splits[c]) {
                    for (std::size_t i = 0; i < split.size(); ++i) {
                        magnitude[slots[c][i]] = split[i];
                    }
                    choose(c + 1);
                }
            };
            choose(0);
        });
    }
}

// Distinct letter rotations starting inside the first block. A single block
// D^e reads the same from every letter.
inline unsigned letter_phases(const Word &w)
{
    if (w.block_count() == 1) {
        return 1;
    }
    return static_cast<unsigned>(std::abs(w.blocks().front().exponent));
}

template <typename Visitor>
void enumerate_words(const MultiDegree &m, Visitor &&visit, const OracleLimits &limits = {})
{
    check_enumeration_bound(m, limits);
    for_each_block_word(m, [&](const Word &w) {
        const unsigned first = letter_phases(w);
        for (unsigned phase = 0; phase < first; ++phase) {
            visit(phase == 0 ? w : Word(w.blocks(), phase));
        }
    });
}

/// Rotation-class bookkeeping over all words of multidegree m.
struct WordCensus
{
    BigInt total_words = 0;
    BigInt nonperiodic_classes = 0;
    /// period -> number of rotation classes with that period
    std::map<unsigned, BigInt> classes_by_period;
    /// canonical representatives of nonperiodic classes (filled on request)
    std::vector<Word> representatives;
};

inline WordCensus word_census(const MultiDegree &m, const OracleLimits &limits = {}, bool keep_representatives = false)
{
    check_enumeration_bound(m, limits);
    WordCensus census;
    std::unordered_set<std::string> seen;
    for_each_block_word(m, [&](const Word &w) {
        census.total_words += letter_phases(w);
        Word canon = canonical_form(w);
        std::string key;
        key.reserve(canon.block_count() * sizeof(std::uint64_t));
        for (const Block &b : canon.blocks()) {
            std::uint64_t k = detail::block_key(b);
            key.append(reinterpret_cast<const char *>(&k), sizeof k);
        }
        if (!seen.insert(std::move(key)).second) {
            return;
        }
        const unsigned period = word_period(canon);
        census.classes_by_period[period] += 1;
        if (period == 1) {
            census.nonperiodic_classes += 1;
            if (keep_representatives) {
                census.representatives.push_back(std::move(canon));
            }
        }
    });
    if (keep_representatives) {
        std::sort(census.representatives.begin(), census.representatives.end(), [](const Word &a, const Word &b) {
            std::vector<std::uint64_t> ka, kb;
            for (const Block &x : a.blocks()) {
                ka.push_back(detail::block_key(x));
            }
            for (const Block &x : b.blocks()) {
                kb.push_back(detail::block_key(x));
            }
            return ka < kb;
        });
    }
    return census;
}

inline BigInt count_words(const MultiDegree &m, const OracleLimits &limits = {})
{
    BigInt count = 0;
    enumerate_words(m, [&](const Word &) { count += 1; }, limits);
    return count;
}

/// Rotation classes of nonperiodic words with multidegree m.
inline BigInt theta_oracle(const MultiDegree &m, const OracleLimits &limits = {})
{
    return word_census(m, limits).nonperiodic_classes;
}

/// Bead colouring of a circular necklace. Unsigned colourings use only
/// `indices`; signed colourings also mark each bead as barred or not.
struct NecklaceColouring
{
    std::vector<unsigned> indices;
    std::vector<bool> barred;

    bool is_signed() const noexcept
    {
        return !barred.empty();
    }

    std::string to_string() const
    {
        std::string out;
        for (std::size_t k = 0; k < indices.size(); ++k) {
            out += std::to_string(indices[k]);
            if (is_signed() && barred[k]) {
                out += '\'';
            }
        }
        return out;
    }
};

/// Visits the canonical (Lyndon) representative of every nonperiodic
/// unsigned necklace with m_i beads of colour i.
template <typename Visitor>
void for_each_necklace(const MultiDegree &m, Visitor &&visit, const OracleLimits &limits = {})
{
    check_enumeration_bound(m, limits);
    std::vector<unsigned> beads;
    for (unsigned c = 0; c < m.size(); ++c) {
        beads.insert(beads.end(), m[c], c + 1);
    }
    do {
        if (detail::is_lyndon<unsigned>(beads)) {
            visit(NecklaceColouring{beads, {}});
        }
    } while (std::next_permutation(beads.begin(), beads.end()));
}

inline BigInt necklace_M_oracle(const MultiDegree &m, const OracleLimits &limits = {})
{
    BigInt count = 0;
    for_each_necklace(m, [&](const NecklaceColouring &) { count += 1; }, limits);
    return count;
}

/// Visits the canonical representative of every nonperiodic signed necklace:
/// 2r colours c_i and barred c_i, m_i beads of index i, and no c_i adjacent
/// to barred c_i (cyclically).
template <typename Visitor>
void for_each_signed_necklace(const MultiDegree &m, Visitor &&visit, const OracleLimits &limits = {})
{
    check_enumeration_bound(m, limits);
    std::vector<unsigned> indices;
    for (unsigned c = 0; c < m.size(); ++c) {
        indices.insert(indices.end(), m[c], c + 1);
    }
    const std::size_t n = indices.size();
    std::vector<unsigned> code(n);
    do {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            bool allowed = true;
            for (std::size_t k = 0; k < n && allowed; ++k) {
                const std::size_t next = (k + 1) % n;
                const bool bar_k = (mask >> k) & 1u;
                const bool bar_next = (mask >> next) & 1u;
                allowed = !(indices[k] == indices[next] && bar_k != bar_next);
            }
            if (!allowed) {
                continue;
            }
            for (std::size_t k = 0; k < n; ++k) {
                code[k] = 2 * indices[k] + static_cast<unsigned>((mask >> k) & 1u);
            }
            if (detail::is_lyndon<unsigned>(code)) {
                std::vector<bool> bars(n);
                for (std::size_t k = 0; k < n; ++k) {
                    bars[k] = (mask >> k) & 1u;
                }
                visit(NecklaceColouring{indices, std::move(bars)});
            }
        }
    } while (std::next_permutation(indices.begin(), indices.end()));
}

inline BigInt signed_necklace_oracle(const MultiDegree &m, const OracleLimits &limits = {})
{
    BigInt count = 0;
    for_each_signed_necklace(m, [&](const NecklaceColouring &) { count += 1; }, limits);
    return count;
}

} // namespace wittpaths

#endif
