#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <vector>

namespace frozencol {

/// A subset of the vertex range [0, universe) stored as 64-bit words.
///
/// Sets over the same universe compare, combine and iterate in ascending
/// vertex order. Binary operations require equal universes.
class VertexSet {
public:
    using Word = std::uint64_t;
    static constexpr int word_bits = 64;

    VertexSet() = default;
    explicit VertexSet(int universe)
        : universe_(universe), words_(static_cast<std::size_t>((universe + word_bits - 1) / word_bits), 0) {
        if (universe < 0) {
            throw std::invalid_argument("VertexSet: negative universe");
        }
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (auto& w : s.words_) w = ~Word{0};
        s.trim();
        return s;
    }

    template <typename Range>
    static VertexSet of(int universe, const Range& members) {
        VertexSet s(universe);
        for (int v : members) s.insert(v);
        return s;
    }

    static VertexSet of(int universe, std::initializer_list<int> members) {
        VertexSet s(universe);
        for (int v : members) s.insert(v);
        return s;
    }

    int universe() const noexcept { return universe_; }

    bool contains(int v) const noexcept {
        return v >= 0 && v < universe_ && ((words_[word_of(v)] >> bit_of(v)) & 1U);
    }

    void insert(int v) {
        check(v);
        words_[word_of(v)] |= Word{1} << bit_of(v);
    }

    void erase(int v) {
        check(v);
        words_[word_of(v)] &= ~(Word{1} << bit_of(v));
    }

    int size() const noexcept {
        int c = 0;
        for (Word w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const noexcept {
        return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
    }

    /// Smallest member, or -1 when empty.
    int first() const noexcept { return next(-1); }

    /// Smallest member strictly greater than v, or -1.
    int next(int v) const noexcept {
        int start = v + 1;
        if (start >= universe_) return -1;
        std::size_t wi = word_of(start);
        Word w = words_[wi] & (~Word{0} << bit_of(start));
        while (true) {
            if (w != 0) return static_cast<int>(wi) * word_bits + std::countr_zero(w);
            if (++wi == words_.size()) return -1;
            w = words_[wi];
        }
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    bool intersects(const VertexSet& o) const {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    VertexSet& operator&=(const VertexSet& o) {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    /// Complement within the universe.
    VertexSet operator~() const {
        VertexSet s = *this;
        for (auto& w : s.words_) w = ~w;
        s.trim();
        return s;
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) = default;

    /// Lexicographic order on the sorted member lists.
    friend bool operator<(const VertexSet& a, const VertexSet& b) {
        int x = a.first();
        int y = b.first();
        while (x >= 0 && y >= 0) {
            if (x != y) return x < y;
            x = a.next(x);
            y = b.next(y);
        }
        return x < 0 && y >= 0;
    }

    const std::vector<Word>& words() const noexcept { return words_; }

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = const int*;
        using reference = int;

        iterator() = default;
        iterator(const VertexSet* s, int v) : set_(s), v_(v) {}
        int operator*() const { return v_; }
        iterator& operator++() {
            v_ = set_->next(v_);
            return *this;
        }
        iterator operator++(int) {
            iterator t = *this;
            ++*this;
            return t;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.v_ == b.v_; }

    private:
        const VertexSet* set_ = nullptr;
        int v_ = -1;
    };

    iterator begin() const { return {this, first()}; }
    iterator end() const { return {this, -1}; }

private:
    static std::size_t word_of(int v) noexcept { return static_cast<std::size_t>(v) / word_bits; }
    static int bit_of(int v) noexcept { return v % word_bits; }

    void check(int v) const {
        if (v < 0 || v >= universe_) throw std::out_of_range("VertexSet: vertex out of range");
    }
    void same_universe(const VertexSet& o) const {
        if (o.universe_ != universe_) throw std::invalid_argument("VertexSet: universe mismatch");
    }
    void trim() noexcept {
        int rem = universe_ % word_bits;
        if (rem != 0 && !words_.empty()) words_.back() &= (Word{1} << rem) - 1;
    }

    int universe_ = 0;
    std::vector<Word> words_;
};

}  // namespace frozencol
