#include "dpcstar/relation.hpp"

#include <algorithm>

namespace dpcstar {

namespace {
constexpr std::uint64_t kAllOnes = ~std::uint64_t(0);
}

Relation::Relation(int source_size, int target_size)
    : rows_(source_size),
      cols_(target_size),
      row_words_((target_size + 63) / 64),
      bits_(std::size_t(source_size) * row_words_, 0) {
    if (source_size < 0 || target_size < 0)
        throw std::invalid_argument("Relation: negative dimension");
}

Relation Relation::universal(int source_size, int target_size) {
    Relation r(source_size, target_size);
    std::fill(r.bits_.begin(), r.bits_.end(), kAllOnes);
    r.trim_rows();
    return r;
}

Relation Relation::product(const ValueSet& sources, const ValueSet& targets) {
    Relation r(sources.universe(), targets.universe());
    r.insert_product(sources, targets);
    return r;
}

Relation Relation::from_tuples(int source_size, int target_size,
                               const std::vector<std::pair<int, int>>& tuples) {
    Relation r(source_size, target_size);
    for (auto [a, b] : tuples) r.insert(a, b);
    return r;
}

void Relation::insert_product(const ValueSet& sources, const ValueSet& targets) {
    if (sources.universe() != rows_ || targets.universe() != cols_)
        throw std::invalid_argument("Relation: dimension mismatch");
    auto tw = targets.words();
    sources.for_each([&](int a) {
        auto r = row(a);
        for (int w = 0; w < row_words_; ++w) r[w] |= tw[w];
    });
}

void Relation::trim_rows() {
    int tail = cols_ & 63;
    if (!tail || row_words_ == 0) return;
    Word mask = (Word(1) << tail) - 1;
    for (int a = 0; a < rows_; ++a) row(a)[row_words_ - 1] &= mask;
}

bool Relation::empty() const {
    for (auto w : bits_)
        if (w) return false;
    return true;
}

long Relation::count() const {
    long c = 0;
    for (auto w : bits_) c += std::popcount(w);
    return c;
}

Relation Relation::inverse() const {
    Relation t(cols_, rows_);
    for (int a = 0; a < rows_; ++a) {
        auto r = row(a);
        for (int w = 0; w < row_words_; ++w) {
            Word x = r[w];
            while (x) {
                int b = w * 64 + std::countr_zero(x);
                t.insert(b, a);
                x &= x - 1;
            }
        }
    }
    return t;
}

ValueSet Relation::image_of(int a) const {
    if (a < 0 || a >= rows_) throw std::out_of_range("Relation: row out of range");
    ValueSet s(cols_);
    auto r = row(a);
    for (int w = 0; w < row_words_; ++w) {
        Word x = r[w];
        while (x) {
            s.insert(w * 64 + std::countr_zero(x));
            x &= x - 1;
        }
    }
    return s;
}

ValueSet Relation::image(const ValueSet& sources) const {
    if (sources.universe() != rows_)
        throw std::invalid_argument("Relation: source set mismatch");
    std::vector<Word> acc(row_words_, 0);
    sources.for_each([&](int a) {
        auto r = row(a);
        for (int w = 0; w < row_words_; ++w) acc[w] |= r[w];
    });
    ValueSet s(cols_);
    for (int w = 0; w < row_words_; ++w) {
        Word x = acc[w];
        while (x) {
            s.insert(w * 64 + std::countr_zero(x));
            x &= x - 1;
        }
    }
    return s;
}

ValueSet Relation::preimage(const ValueSet& targets) const {
    if (targets.universe() != cols_)
        throw std::invalid_argument("Relation: target set mismatch");
    ValueSet s(rows_);
    auto tw = targets.words();
    for (int a = 0; a < rows_; ++a) {
        auto r = row(a);
        for (int w = 0; w < row_words_; ++w) {
            if (r[w] & tw[w]) {
                s.insert(a);
                break;
            }
        }
    }
    return s;
}

void Relation::restrict_to(const ValueSet& sources, const ValueSet& targets) {
    if (sources.universe() != rows_ || targets.universe() != cols_)
        throw std::invalid_argument("Relation: dimension mismatch");
    auto tw = targets.words();
    for (int a = 0; a < rows_; ++a) {
        auto r = row(a);
        if (sources.contains(a)) {
            for (int w = 0; w < row_words_; ++w) r[w] &= tw[w];
        } else {
            for (int w = 0; w < row_words_; ++w) r[w] = 0;
        }
    }
}

bool Relation::covers_product(const ValueSet& sources, const ValueSet& targets) const {
    if (sources.universe() != rows_ || targets.universe() != cols_)
        throw std::invalid_argument("Relation: dimension mismatch");
    auto tw = targets.words();
    bool ok = true;
    sources.for_each([&](int a) {
        if (!ok) return;
        auto r = row(a);
        for (int w = 0; w < row_words_; ++w) {
            if (tw[w] & ~r[w]) {
                ok = false;
                return;
            }
        }
    });
    return ok;
}

Relation& Relation::operator&=(const Relation& o) {
    same_shape(o);
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
    return *this;
}

bool Relation::subset_of(const Relation& o) const {
    same_shape(o);
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] & ~o.bits_[i]) return false;
    return true;
}

std::vector<std::pair<int, int>> Relation::tuples() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(count());
    for (int a = 0; a < rows_; ++a) {
        auto r = row(a);
        for (int w = 0; w < row_words_; ++w) {
            Word x = r[w];
            while (x) {
                out.emplace_back(a, w * 64 + std::countr_zero(x));
                x &= x - 1;
            }
        }
    }
    return out;
}

Relation compose(const Relation& r, const Relation& s) {
    if (r.cols_ != s.rows_)
        throw std::invalid_argument("compose: inner dimension mismatch");
    Relation out(r.rows_, s.cols_);
    for (int a = 0; a < r.rows_; ++a) {
        auto ra = r.row(a);
        auto oa = out.row(a);
        for (int w = 0; w < r.row_words_; ++w) {
            Relation::Word x = ra[w];
            while (x) {
                int b = w * 64 + std::countr_zero(x);
                auto sb = s.row(b);
                for (int t = 0; t < s.row_words_; ++t) oa[t] |= sb[t];
                x &= x - 1;
            }
        }
    }
    return out;
}

Relation compose_transposed(const Relation& r, const Relation& s) {
    if (r.cols_ != s.cols_)
        throw std::invalid_argument("compose_transposed: column dimension mismatch");
    Relation out(r.rows_, s.rows_);
    for (int a = 0; a < r.rows_; ++a) {
        auto ra = r.row(a);
        for (int b = 0; b < s.rows_; ++b) {
            auto sb = s.row(b);
            for (int w = 0; w < r.row_words_; ++w) {
                if (ra[w] & sb[w]) {
                    out.insert(a, b);
                    break;
                }
            }
        }
    }
    return out;
}

}  // namespace dpcstar
