#include "addcomb/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace addcomb {

GroupSpec::GroupSpec(std::vector<std::uint32_t> orders, std::uint64_t max_order)
    : orders_(std::move(orders)) {
    if (orders_.empty())
        throw std::invalid_argument("group: factor list must be nonempty");
    order_ = 1;
    for (std::uint32_t n : orders_) {
        if (n == 0) throw std::invalid_argument("group: factor orders must be >= 1");
        if (order_ > max_order / n)
            throw std::domain_error("group: order exceeds configured maximum");
        order_ *= n;
    }
    strides_.resize(orders_.size());
    std::uint64_t s = 1;
    for (std::size_t j = orders_.size(); j-- > 0;) {
        strides_[j] = static_cast<std::uint32_t>(s);
        s *= orders_[j];
    }
}

std::uint32_t GroupSpec::add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t r = 0;
    for (std::size_t j = 0; j < orders_.size(); ++j) {
        const std::uint32_t n = orders_[j];
        const std::uint32_t st = strides_[j];
        const std::uint32_t da = (a / st) % n;
        const std::uint32_t db = (b / st) % n;
        std::uint32_t d = da + db;
        if (d >= n) d -= n;
        r += d * st;
    }
    return r;
}

std::uint32_t GroupSpec::neg(std::uint32_t a) const {
    std::uint32_t r = 0;
    for (std::size_t j = 0; j < orders_.size(); ++j) {
        const std::uint32_t n = orders_[j];
        const std::uint32_t st = strides_[j];
        const std::uint32_t da = (a / st) % n;
        r += (da == 0 ? 0 : n - da) * st;
    }
    return r;
}

std::uint32_t GroupSpec::sub(std::uint32_t a, std::uint32_t b) const {
    return add(a, neg(b));
}

std::uint32_t GroupSpec::flatten(std::span<const std::uint32_t> coords) const {
    if (coords.size() != orders_.size())
        throw std::invalid_argument("flatten: coordinate rank mismatch");
    std::uint32_t r = 0;
    for (std::size_t j = 0; j < orders_.size(); ++j) {
        if (coords[j] >= orders_[j])
            throw std::out_of_range("flatten: coordinate out of range");
        r += coords[j] * strides_[j];
    }
    return r;
}

std::vector<std::uint32_t> GroupSpec::coords(std::uint32_t index) const {
    if (index >= order_) throw std::out_of_range("coords: index out of range");
    std::vector<std::uint32_t> c(orders_.size());
    for (std::size_t j = 0; j < orders_.size(); ++j)
        c[j] = (index / strides_[j]) % orders_[j];
    return c;
}

std::uint64_t GroupSpec::element_order(std::uint32_t a) const {
    if (a >= order_) throw std::out_of_range("element_order: index out of range");
    std::uint64_t ord = 1;
    for (std::size_t j = 0; j < orders_.size(); ++j) {
        const std::uint64_t n = orders_[j];
        const std::uint64_t da = (a / strides_[j]) % n;
        const std::uint64_t oj = n / std::gcd(n, da == 0 ? n : da);
        ord = std::lcm(ord, oj);
    }
    return ord;
}

std::vector<std::uint32_t> GroupSpec::invariant_factors() const {
    // Per prime p, collect the exponents appearing in the factor orders and
    // sort them descending; invariant factor i (from the largest down) is the
    // product of the i-th largest prime powers.
    std::map<std::uint32_t, std::vector<std::uint32_t>> exps;
    std::size_t width = 0;
    for (std::uint32_t n : orders_) {
        std::uint32_t m = n;
        for (std::uint32_t p = 2; static_cast<std::uint64_t>(p) * p <= m; ++p) {
            if (m % p != 0) continue;
            std::uint32_t e = 0;
            while (m % p == 0) { m /= p; ++e; }
            exps[p].push_back(e);
        }
        if (m > 1) exps[m].push_back(1);
    }
    for (auto& [p, v] : exps) {
        std::sort(v.begin(), v.end(), std::greater<>());
        width = std::max(width, v.size());
    }
    if (width == 0) return {1};  // trivial group
    std::vector<std::uint32_t> factors(width, 1);
    for (auto& [p, v] : exps) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            std::uint32_t pw = 1;
            for (std::uint32_t e = 0; e < v[i]; ++e) pw *= p;
            factors[i] *= pw;  // factors[0] is the largest invariant factor
        }
    }
    std::reverse(factors.begin(), factors.end());  // ascending divisibility
    return factors;
}

bool GroupSpec::is_cyclic() const { return invariant_factors().size() <= 1; }

std::string GroupSpec::describe() const {
    std::string s;
    for (std::size_t j = 0; j < orders_.size(); ++j) {
        if (j) s += " x ";
        s += "Z" + std::to_string(orders_[j]);
    }
    return s;
}

Group make_group(std::vector<std::uint32_t> orders, std::uint64_t max_order) {
    return std::make_shared<const GroupSpec>(std::move(orders), max_order);
}

}  // namespace addcomb
