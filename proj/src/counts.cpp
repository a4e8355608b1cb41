#include "trainyard/counts.hpp"

#include <stdexcept>
#include <string>

#include "trainyard/error.hpp"

namespace trainyard {

namespace {

void check_sign(int sign) {
    if (sign != 1 && sign != -1) throw DomainError("rod source sign must be +1 or -1");
}

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// F(0..horizon) from a dense count vector c[0..horizon].
std::vector<Integer> run_recursion(const std::vector<Integer>& c, Length horizon) {
    std::vector<Integer> f(static_cast<std::size_t>(horizon) + 1);
    f[0] = 1;
    std::vector<Length> support;
    for (Length l = 1; l <= horizon; ++l) {
        if (c[static_cast<std::size_t>(l)] != 0) support.push_back(l);
    }
    for (Length n = 1; n <= horizon; ++n) {
        Integer& acc = f[static_cast<std::size_t>(n)];
        for (Length l : support) {
            if (l > n) break;
            mpz_addmul(acc.get_mpz_t(), c[static_cast<std::size_t>(l)].get_mpz_t(),
                       f[static_cast<std::size_t>(n - l)].get_mpz_t());
        }
    }
    return f;
}

}  // namespace

RodSource::RodSource(ArithmeticRods a) : v_(a) {
    if (a.first < 1 || a.step < 1) throw DomainError("arithmetic rod source needs first >= 1 and step >= 1");
    check_sign(a.sign);
}

RodSource::RodSource(TrainsOfRods t) : v_(std::move(t)) { check_sign(std::get<TrainsOfRods>(v_).sign); }

std::vector<Integer> RodSource::counts(Length horizon) const {
    if (horizon < 0) throw DomainError("horizon must be >= 0");
    std::vector<Integer> c(static_cast<std::size_t>(horizon) + 1);
    std::visit(overloaded{
                   [&](const RodSet& r) {
                       for (const auto& [l, m] : r) {
                           if (l > horizon) break;
                           c[static_cast<std::size_t>(l)] = m;
                       }
                   },
                   [&](const ArithmeticRods& a) {
                       for (Length l = a.first; l <= horizon; l += a.step) c[static_cast<std::size_t>(l)] = a.sign;
                   },
                   [&](const TrainsOfRods& t) {
                       const auto f = train_counts(t.base, horizon);
                       for (Length l = 1; l <= horizon; ++l) c[static_cast<std::size_t>(l)] = t.sign * f.values[static_cast<std::size_t>(l)];
                   },
                   [&](const ExplicitCounts& e) {
                       if (static_cast<Length>(e.values.size()) < horizon)
                           throw DomainError("explicit rod counts known only through length " +
                                             std::to_string(e.values.size()) + ", needed " + std::to_string(horizon));
                       for (Length l = 1; l <= horizon; ++l) c[static_cast<std::size_t>(l)] = e.values[static_cast<std::size_t>(l - 1)];
                   },
               },
               v_);
    return c;
}

Integer RodSource::count(Length n) const {
    if (n < 1) return 0;
    if (const auto* r = finite()) return r->count(n);
    return counts(n).back();
}

RodSource negate(const RodSource& src) {
    return std::visit(overloaded{
                          [](const RodSet& r) { return RodSource(negate(r)); },
                          [](ArithmeticRods a) {
                              a.sign = -a.sign;
                              return RodSource(a);
                          },
                          [](TrainsOfRods t) {
                              t.sign = -t.sign;
                              return RodSource(std::move(t));
                          },
                          [](ExplicitCounts e) {
                              for (auto& v : e.values) v = -v;
                              return RodSource(std::move(e));
                          },
                      },
                      src.variant());
}

std::optional<RationalGf> rational_gf(const RodSource& src) {
    return std::visit(overloaded{
                          [](const RodSet& r) -> std::optional<RationalGf> { return RationalGf{rod_poly(r), Poly{1}}; },
                          [](const ArithmeticRods& a) -> std::optional<RationalGf> {
                              // sign x^first / (1 - x^step)
                              return RationalGf{Poly::monomial(a.sign, a.first), Poly{1} - Poly::monomial(1, a.step)};
                          },
                          [](const TrainsOfRods& t) -> std::optional<RationalGf> {
                              // sign (1/(1-C) - 1) = sign C / (1 - C)
                              const Poly c = rod_poly(t.base);
                              return RationalGf{t.sign == 1 ? c : -c, Poly{1} - c};
                          },
                          [](const ExplicitCounts&) -> std::optional<RationalGf> { return std::nullopt; },
                      },
                      src.variant());
}

Integer CountSeq::at(Length n) const {
    if (n < start) return 0;
    if (n > last_index()) throw std::out_of_range("sequence index " + std::to_string(n) + " beyond horizon");
    return values[static_cast<std::size_t>(n - start)];
}

Length Train::length() const {
    Length total = 0;
    for (const auto& r : rods) total += r.length;
    return total;
}

int Train::sign() const {
    int s = 1;
    for (const auto& r : rods) s *= r.sign;
    return s;
}

CountSeq train_counts(const RodSource& src, Length horizon) {
    if (horizon < 0) throw DomainError("horizon must be >= 0");
    return {0, run_recursion(src.counts(horizon), horizon)};
}

CountSeq discrepancies(const RodSource& r, const RodSource& s, Length horizon) {
    if (horizon < 1) throw DomainError("discrepancy horizon must be >= 1");
    const auto f = train_counts(r, horizon).values;
    const auto cs = s.counts(horizon);
    CountSeq d{1, std::vector<Integer>(static_cast<std::size_t>(horizon))};
    for (Length n = 1; n <= horizon; ++n) {
        Integer acc = f[static_cast<std::size_t>(n)];
        for (Length l = 1; l <= n; ++l) {
            const Integer& c = cs[static_cast<std::size_t>(l)];
            if (c != 0) mpz_submul(acc.get_mpz_t(), c.get_mpz_t(), f[static_cast<std::size_t>(n - l)].get_mpz_t());
        }
        d.values[static_cast<std::size_t>(n - 1)] = std::move(acc);
    }
    return d;
}

CountSeq sequence_discrepancies(const CountSeq& seq, const RodSet& s, Length horizon) {
    if (seq.start != 0 || seq.values.empty() || seq.values.front() != 1)
        throw DomainError("sequence must start at index 0 with value 1");
    if (horizon < 1) throw DomainError("discrepancy horizon must be >= 1");
    if (seq.last_index() < horizon) throw DomainError("sequence is shorter than the discrepancy horizon");
    CountSeq d{1, std::vector<Integer>(static_cast<std::size_t>(horizon))};
    for (Length n = 1; n <= horizon; ++n) {
        Integer acc = seq.at(n);
        for (const auto& [l, m] : s) {
            if (l > n) break;
            acc -= m * seq.at(n - l);
        }
        d.values[static_cast<std::size_t>(n - 1)] = std::move(acc);
    }
    return d;
}

namespace {

struct ColoredRod {
    Length length;
    std::size_t color;
    int sign;
};

std::vector<ColoredRod> colored_rods(const RodSet& rods) {
    std::vector<ColoredRod> out;
    for (const auto& [l, m] : rods) {
        const Integer mag = abs(m);
        if (!mag.fits_ulong_p()) throw DomainError("multiplicity too large to enumerate");
        const auto k = mag.get_ui();
        for (std::size_t c = 1; c <= k; ++c) out.push_back({l, c, sgn(m)});
    }
    return out;
}

class TrainWalker {
public:
    TrainWalker(const RodSet& rods, std::size_t cap, std::vector<Train>* sink)
        : rods_(colored_rods(rods)), cap_(cap), sink_(sink) {}

    Integer run(Length n) {
        if (n < 0) throw DomainError("train length must be >= 0");
        walk(n, 1);
        return net_;
    }

private:
    void walk(Length remaining, int sign) {
        if (remaining == 0) {
            if (++total_ > cap_) throw DomainError("enumeration cap of " + std::to_string(cap_) + " trains exceeded");
            net_ += sign;
            if (sink_) sink_->push_back(Train{prefix_});
            return;
        }
        for (const auto& r : rods_) {
            if (r.length > remaining) break;
            prefix_.push_back({r.length, r.color, r.sign});
            walk(remaining - r.length, sign * r.sign);
            prefix_.pop_back();
        }
    }

    std::vector<ColoredRod> rods_;
    std::size_t cap_;
    std::vector<Train>* sink_;
    std::vector<TrainRod> prefix_;
    std::size_t total_ = 0;
    Integer net_ = 0;
};

}  // namespace

Enumeration enumerate_trains(const RodSet& rods, Length n, std::size_t cap) {
    Enumeration out;
    out.net = TrainWalker(rods, cap, &out.trains).run(n);
    return out;
}

Integer enumerate_net(const RodSet& rods, Length n, std::size_t cap) { return TrainWalker(rods, cap, nullptr).run(n); }

namespace {

Integer binomial(unsigned long n, unsigned long k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Integer power(const Integer& base, unsigned long e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

Integer diagonal_sum(Length a, const Integer& ma, Length b, const Integer& mb, Length n) {
    if (n < 0) throw DomainError("length must be >= 0");
    Integer total = 0;
    for (Length j = 0; j * b <= n; ++j) {
        const Length rest = n - j * b;
        if (rest % a != 0) continue;
        const Length i = rest / a;
        total += binomial(static_cast<unsigned long>(i + j), static_cast<unsigned long>(j)) *
                 power(ma, static_cast<unsigned long>(i)) * power(mb, static_cast<unsigned long>(j));
    }
    return total;
}

}  // namespace

Integer binomial_count(const Rod& first, const Rod& second, Length n) {
    if (first.length < 1 || second.length < 1) throw DomainError("rod length must be >= 1");
    return diagonal_sum(first.length, first.sign, second.length, second.sign, n);
}

Integer binomial_count(const RodSet& rods, Length n) {
    if (rods.shape_size() != 2) throw DomainError("binomial count needs a rod set with exactly two lengths");
    auto it = rods.begin();
    const auto& [a, ma] = *it++;
    const auto& [b, mb] = *it;
    return diagonal_sum(a, ma, b, mb, n);
}

}  // namespace trainyard
