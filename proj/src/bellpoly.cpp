#include "mixstir/bellpoly.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <stdexcept>

namespace mixstir {

WeightSequence WeightSequence::characteristic_weighted(SizeSet S) {
    WeightSequence w(Kind::CharacteristicWeighted);
    w.set_ = std::move(S);
    return w;
}

WeightSequence WeightSequence::explicit_values(std::vector<Nat> values) {
    WeightSequence w(Kind::Explicit);
    w.values_ = std::move(values);
    return w;
}

WeightSequence WeightSequence::parse(std::string_view text) {
    if (text == "ones") return ones();
    if (text == "factshift") return fact_shift();
    if (text == "fact") return fact();
    if (text.starts_with("charS:")) {
        return characteristic_weighted(SizeSet::parse(text.substr(6)));
    }
    std::vector<Nat> values;
    std::string_view rest = text;
    while (true) {
        const auto comma = rest.find(',');
        const auto item = rest.substr(0, comma);
        if (item.empty() || item.find_first_not_of("0123456789") != std::string_view::npos) {
            throw std::invalid_argument("invalid weight sequence '" + std::string(text) + "'");
        }
        values.emplace_back(std::string(item));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return explicit_values(std::move(values));
}

Nat WeightSequence::operator()(std::size_t i) const {
    if (i == 0) return 0;
    switch (kind_) {
        case Kind::Ones: return 1;
        case Kind::FactShift: return factorial(i - 1);
        case Kind::Fact: return factorial(i);
        case Kind::CharacteristicWeighted: return set_.contains(i) ? factorial(i - 1) : Nat(0);
        case Kind::Explicit: return i <= values_.size() ? values_[i - 1] : Nat(0);
    }
    return 0;
}

std::string WeightSequence::to_string() const {
    switch (kind_) {
        case Kind::Ones: return "ones";
        case Kind::FactShift: return "factshift";
        case Kind::Fact: return "fact";
        case Kind::CharacteristicWeighted: return "charS:" + set_.to_string();
        case Kind::Explicit: {
            std::string s;
            for (std::size_t i = 0; i < values_.size(); ++i) {
                if (i) s += ',';
                s += values_[i].get_str();
            }
            return s;
        }
    }
    return {};
}

std::size_t MultiplicityVector::parts() const {
    std::size_t p = 0;
    for (auto [i, c] : counts) p += c;
    return p;
}

std::size_t MultiplicityVector::weight() const {
    std::size_t w = 0;
    for (auto [i, c] : counts) w += i * c;
    return w;
}

std::vector<MultiplicityVector> multiplicity_vectors(std::size_t n, std::size_t parts) {
    std::vector<MultiplicityVector> out;
    if (parts > n || (parts == 0 && n != 0)) return out;
    MultiplicityVector cur;
    // parts in non-increasing order, each at most `largest`
    std::function<void(std::size_t, std::size_t, std::size_t)> rec =
        [&](std::size_t remaining, std::size_t slots, std::size_t largest) {
            if (slots == 0) {
                if (remaining == 0) out.push_back(cur);
                return;
            }
            const std::size_t top = std::min(largest, remaining - (slots - 1));
            for (std::size_t s = top; s >= 1 && s * slots >= remaining; --s) {
                ++cur.counts[s];
                rec(remaining - s, slots - 1, s);
                if (--cur.counts[s] == 0) cur.counts.erase(s);
            }
        };
    rec(n, parts, n);
    return out;
}

namespace {

// prod over the vector of (w_i / i!)^{k_i} / k_i!
Rat block_weight(const MultiplicityVector& v, const WeightSequence& w) {
    Rat q = 1;
    for (auto [i, c] : v.counts) {
        Nat num;
        Nat den;
        mpz_pow_ui(num.get_mpz_t(), w(i).get_mpz_t(), c);
        mpz_pow_ui(den.get_mpz_t(), factorial(i).get_mpz_t(), c);
        den *= factorial(c);
        q *= ratio(num, den);
    }
    return q;
}

}  // namespace

Nat bell_partial(std::size_t n, std::size_t k, const WeightSequence& x) {
    Rat sum = 0;
    for (const auto& v : multiplicity_vectors(n, k)) sum += block_weight(v, x);
    return to_nat(sum * factorial(n), "bell_partial");
}

Nat bellstar(std::size_t n, std::size_t k, std::size_t t, const WeightSequence& x,
             const WeightSequence& y) {
    if (k == 0) throw std::invalid_argument("bellstar: k must be >= 1");
    Rat sum = 0;
    for (std::size_t special = 0; special <= n; ++special) {
        const auto ts = multiplicity_vectors(special, t);
        if (ts.empty()) continue;
        const auto ks = multiplicity_vectors(n - special, k - 1);
        for (const auto& tv : ts) {
            const Rat wt = block_weight(tv, x);
            for (const auto& kv : ks) sum += wt * block_weight(kv, y);
        }
    }
    return to_nat(sum * factorial(n) * factorial(k - 1), "bellstar");
}

Nat bellstar_composition(std::size_t n, std::size_t k, std::size_t t, const WeightSequence& a) {
    if (k == 0) throw std::invalid_argument("bellstar_composition: k must be >= 1");
    const std::size_t blocks = t + k - 1;
    std::vector<std::size_t> sizes;
    Nat total = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t remaining) {
        if (sizes.size() == blocks) {
            if (remaining != 0) return;
            Nat term = multinomial(n, sizes);
            for (std::size_t s : sizes) term *= a(s);
            total += term;
            return;
        }
        const std::size_t left = blocks - sizes.size();
        for (std::size_t s = 1; s + (left - 1) <= remaining; ++s) {
            sizes.push_back(s);
            rec(remaining - s);
            sizes.pop_back();
        }
    };
    rec(n);
    return exact_div(total, factorial(t), "bellstar_composition");
}

Nat bell_r_partial(std::size_t n, std::size_t k, std::size_t r, const WeightSequence& x,
                   const WeightSequence& y) {
    Rat sum = 0;
    for (std::size_t free_elems = 0; free_elems <= n; ++free_elems) {
        const auto ks = multiplicity_vectors(free_elems, k);
        if (ks.empty()) continue;
        const std::size_t extra = n - free_elems;
        for (std::size_t nonempty = 0; nonempty <= r; ++nonempty) {
            const std::size_t empty = r - nonempty;
            Nat y0;
            mpz_pow_ui(y0.get_mpz_t(), y(1).get_mpz_t(), empty);
            const Rat empty_weight = ratio(y0, factorial(empty));
            for (const auto& rv : multiplicity_vectors(extra, nonempty)) {
                Rat pinned = empty_weight;
                for (auto [i, c] : rv.counts) {
                    Nat num;
                    Nat den;
                    mpz_pow_ui(num.get_mpz_t(), y(i + 1).get_mpz_t(), c);
                    mpz_pow_ui(den.get_mpz_t(), factorial(i).get_mpz_t(), c);
                    den *= factorial(c);
                    pinned *= ratio(num, den);
                }
                for (const auto& kv : ks) sum += block_weight(kv, x) * pinned;
            }
        }
    }
    return to_nat(sum * factorial(n) * factorial(r), "bell_r_partial");
}

}  // namespace mixstir
