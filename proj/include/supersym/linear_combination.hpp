#pragma once

#include "supersym/rational.hpp"

#include <map>
#include <utility>

namespace supersym {

// Finitely supported map Label -> Rational. Zero coefficients are never
// stored; iteration order is the Label's deterministic ordering. Tag keeps
// distinct spaces over the same label type distinct (sQSym vs sNSym).
template <class Label, class Tag = void>
class LinearCombination {
public:
    using Terms = std::map<Label, Rational>;
    using const_iterator = typename Terms::const_iterator;

    LinearCombination() = default;
    explicit LinearCombination(const Label& l) { terms_[l] = 1; }
    LinearCombination(const Label& l, Rational c)
    {
        if (!c.is_zero())
            terms_[l] = std::move(c);
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }

    Rational coefficient(const Label& l) const
    {
        auto it = terms_.find(l);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add(const Label& l, const Rational& c)
    {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.emplace(l, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    LinearCombination& operator+=(const LinearCombination& o)
    {
        for (const auto& [l, c] : o.terms_)
            add(l, c);
        return *this;
    }

    LinearCombination& operator-=(const LinearCombination& o)
    {
        for (const auto& [l, c] : o.terms_)
            add(l, -c);
        return *this;
    }

    LinearCombination& operator*=(const Rational& c)
    {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [l, v] : terms_)
            v *= c;
        return *this;
    }

    friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
    friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
    friend LinearCombination operator*(const Rational& c, LinearCombination a) { return a *= c; }

    LinearCombination operator-() const
    {
        LinearCombination r = *this;
        for (auto& [l, v] : r.terms_)
            v = -v;
        return r;
    }

    bool operator==(const LinearCombination&) const = default;

private:
    Terms terms_;
};

} // namespace supersym
