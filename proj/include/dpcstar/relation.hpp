#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dpcstar {

/// A set of value indices over a fixed universe, packed into 64-bit words.
class ValueSet {
public:
    ValueSet() = default;
    explicit ValueSet(int universe, bool full = false)
        : universe_(universe), words_(word_count(universe), 0) {
        if (universe < 0) throw std::invalid_argument("ValueSet: negative universe");
        if (full) fill();
    }

    static ValueSet single(int universe, int v) {
        ValueSet s(universe);
        s.insert(v);
        return s;
    }

    int universe() const { return universe_; }

    bool contains(int v) const {
        check(v);
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }
    void insert(int v) {
        check(v);
        words_[v >> 6] |= Word(1) << (v & 63);
    }
    void erase(int v) {
        check(v);
        words_[v >> 6] &= ~(Word(1) << (v & 63));
    }

    void fill() {
        for (auto& w : words_) w = ~Word(0);
        trim();
    }
    void clear() {
        for (auto& w : words_) w = 0;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (auto w : words_) if (w) return false;
        return true;
    }
    /// Lowest member, -1 when empty.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i * 64) + std::countr_zero(words_[i]);
        return -1;
    }

    ValueSet& operator&=(const ValueSet& o) {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    ValueSet& operator|=(const ValueSet& o) {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    friend ValueSet operator&(ValueSet a, const ValueSet& b) { a &= b; return a; }
    friend ValueSet operator|(ValueSet a, const ValueSet& b) { a |= b; return a; }

    bool intersects(const ValueSet& o) const {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool subset_of(const ValueSet& o) const {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool operator==(const ValueSet&) const = default;

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            Word w = words_[i];
            while (w) {
                f(int(i * 64) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }
    std::vector<int> values() const {
        std::vector<int> v;
        v.reserve(count());
        for_each([&](int x) { v.push_back(x); });
        return v;
    }

    std::span<const std::uint64_t> words() const { return words_; }

private:
    using Word = std::uint64_t;
    static int word_count(int n) { return (n + 63) / 64; }
    void check(int v) const {
        if (v < 0 || v >= universe_) throw std::out_of_range("ValueSet: value out of range");
    }
    void same_universe(const ValueSet& o) const {
        if (universe_ != o.universe_) throw std::invalid_argument("ValueSet: universe mismatch");
    }
    void trim() {
        int tail = universe_ & 63;
        if (tail && !words_.empty()) words_.back() &= (Word(1) << tail) - 1;
    }

    int universe_ = 0;
    std::vector<Word> words_;
};

/// Binary relation between two indexed domains, stored as a row-major bit matrix.
/// Row index = source value, column index = target value.
class Relation {
public:
    Relation() = default;
    Relation(int source_size, int target_size);

    static Relation universal(int source_size, int target_size);
    /// All pairs in sources x targets.
    static Relation product(const ValueSet& sources, const ValueSet& targets);
    static Relation from_tuples(int source_size, int target_size,
                                const std::vector<std::pair<int, int>>& tuples);

    int source_size() const { return rows_; }
    int target_size() const { return cols_; }

    bool contains(int a, int b) const {
        check(a, b);
        return (bits_[std::size_t(a) * row_words_ + (b >> 6)] >> (b & 63)) & 1u;
    }
    void insert(int a, int b) {
        check(a, b);
        bits_[std::size_t(a) * row_words_ + (b >> 6)] |= Word(1) << (b & 63);
    }
    void erase(int a, int b) {
        check(a, b);
        bits_[std::size_t(a) * row_words_ + (b >> 6)] &= ~(Word(1) << (b & 63));
    }
    void insert_product(const ValueSet& sources, const ValueSet& targets);

    bool empty() const;
    long count() const;

    Relation inverse() const;

    /// R(a): the row of a as a set of target values.
    ValueSet image_of(int a) const;
    /// R(S): union of the rows indexed by S.
    ValueSet image(const ValueSet& sources) const;
    /// Source values whose row meets `targets`.
    ValueSet preimage(const ValueSet& targets) const;

    /// R <- R ∩ (sources x targets).
    void restrict_to(const ValueSet& sources, const ValueSet& targets);
    /// True when sources x targets ⊆ R.
    bool covers_product(const ValueSet& sources, const ValueSet& targets) const;

    Relation& operator&=(const Relation& o);
    friend Relation operator&(Relation a, const Relation& b) { a &= b; return a; }
    bool subset_of(const Relation& o) const;
    bool operator==(const Relation&) const = default;

    std::vector<std::pair<int, int>> tuples() const;

    /// r ∘ s: pairs (a, c) with some b such that (a, b) ∈ r and (b, c) ∈ s.
    friend Relation compose(const Relation& r, const Relation& s);
    /// r ∘ s⁻¹ without materializing the transpose; r: A->C, s: B->C.
    friend Relation compose_transposed(const Relation& r, const Relation& s);

private:
    using Word = std::uint64_t;
    void check(int a, int b) const {
        if (a < 0 || a >= rows_ || b < 0 || b >= cols_)
            throw std::out_of_range("Relation: tuple out of range");
    }
    void same_shape(const Relation& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Relation: dimension mismatch");
    }
    std::span<const Word> row(int a) const {
        return {bits_.data() + std::size_t(a) * row_words_, std::size_t(row_words_)};
    }
    std::span<Word> row(int a) {
        return {bits_.data() + std::size_t(a) * row_words_, std::size_t(row_words_)};
    }
    void trim_rows();

    int rows_ = 0, cols_ = 0, row_words_ = 0;
    std::vector<Word> bits_;
};

Relation compose(const Relation& r, const Relation& s);
Relation compose_transposed(const Relation& r, const Relation& s);

/// Relation of arity up to 4, kept as an explicit tuple list.
struct NaryRelation {
    std::vector<int> domain_sizes;
    std::vector<std::vector<int>> tuples;

    int arity() const { return int(domain_sizes.size()); }
};

}  // namespace dpcstar
