#ifndef MLINES_VERTEX_SET_HPP
#define MLINES_VERTEX_SET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace mlines {

/// Fixed-universe set of vertex indices, packed 64 per word.
/// Set algebra (intersection, union, difference) runs in O(n/64) word
/// operations, which is what makes pairwise line dedup and simplicial
/// checks cheap.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe)
        : n_(universe), words_((universe + 63) / 64, 0) {}

    int universe() const { return n_; }

    bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
    void set(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    void fill() {
        for (auto& w : words_) w = ~std::uint64_t{0};
        trim();
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    void intersect_with(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    }

    void union_with(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    }

    void subtract(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    }

    void complement() {
        for (auto& w : words_) w = ~w;
        trim();
    }

    bool is_subset_of(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    /// Lowest member, or -1 when empty.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i * 64) + std::countr_zero(words_[i]);
        return -1;
    }

    /// Lowest member strictly greater than v, or -1.
    int next(int v) const {
        std::size_t i = std::size_t(v) >> 6;
        std::uint64_t w = words_[i] & ~((std::uint64_t{2} << (v & 63)) - 1);
        while (true) {
            if (w) return int(i * 64) + std::countr_zero(w);
            if (++i == words_.size()) return -1;
            w = words_[i];
        }
    }

    /// k-th smallest member (k is 0-based); requires k < count().
    int select(int k) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            int c = std::popcount(words_[i]);
            if (k < c) {
                std::uint64_t w = words_[i];
                while (k--) w &= w - 1;
                return int(i * 64) + std::countr_zero(w);
            }
            k -= c;
        }
        return -1;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    bool operator==(const VertexSet& o) const {
        return n_ == o.n_ && words_ == o.words_;
    }

    // Canonical order: member sets compared as binary numbers with bit v
    // standing for vertex v. Used to sort distinct lines deterministically.
    bool operator<(const VertexSet& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        for (std::size_t i = words_.size(); i-- > 0;)
            if (words_[i] != o.words_[i]) return words_[i] < o.words_[i];
        return false;
    }

private:
    void trim() {
        if ((n_ & 63) && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace mlines

#endif
