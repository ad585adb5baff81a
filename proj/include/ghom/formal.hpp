#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace gh {

// Formal rational linear combination of basis keys. Keys are the compact
// string encodings used by each layer; zero coefficients are pruned eagerly.
struct FormalSum {
    std::map<std::string, mpq_class> terms;

    void add(const std::string& key, const mpq_class& coeff) {
        if (coeff == 0) return;
        auto [it, fresh] = terms.emplace(key, coeff);
        if (!fresh) {
            it->second += coeff;
            if (it->second == 0) terms.erase(it);
        }
    }

    bool is_zero() const { return terms.empty(); }

    mpq_class coeff(const std::string& key) const {
        auto it = terms.find(key);
        return it == terms.end() ? mpq_class(0) : it->second;
    }

    FormalSum& operator+=(const FormalSum& other) {
        for (const auto& [k, v] : other.terms) add(k, v);
        return *this;
    }

    FormalSum& operator*=(const mpq_class& scalar) {
        if (scalar == 0) {
            terms.clear();
            return *this;
        }
        for (auto& [k, v] : terms) v *= scalar;
        return *this;
    }

    friend bool operator==(const FormalSum& a, const FormalSum& b) {
        return a.terms == b.terms;
    }
};

inline FormalSum operator+(FormalSum a, const FormalSum& b) {
    a += b;
    return a;
}

inline FormalSum operator*(const mpq_class& s, FormalSum a) {
    a *= s;
    return a;
}

}  // namespace gh
