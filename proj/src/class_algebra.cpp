#include "hurwitz/class_algebra.hpp"

#include "hurwitz/characters.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

Rat central_char(const Partition& mu, const Partition& lambda) {
    const long n = lambda.size();
    const long k = n - mu.size();
    if (k < 0) return Rat(0);
    const Partition padded = mu.with_ones(k);
    const long m1 = mu.mult(1);
    const Rat count(binomial(k + m1, m1));
    return count * Rat(class_size(padded)) * Rat(character(lambda, padded)) / Rat(dimension(lambda));
}

Rat completed_cycle_eigenvalue(long m, const Partition& lambda) {
    if (m < 1) throw precondition_error("completed_cycle_eigenvalue: m must be >= 1");
    return shifted_psum(m, lambda) / Rat(factorial(m));
}

namespace {

Rat psum_product(const Partition& mu, const Partition& lambda) {
    Rat out(1);
    for (long part : mu.parts()) out *= completed_cycle_eigenvalue(part, lambda);
    return out;
}

} // namespace

std::map<Partition, Rat> completed_class(const Partition& mu) {
    std::map<Partition, Rat> c;
    if (mu.empty()) {
        c.emplace(Partition{}, Rat(1));
        return c;
    }
    const long m = mu.size();
    // Solve upward by |rho| = n: functions for larger rho vanish on smaller
    // lambda, and within a size class character orthogonality inverts the
    // evaluation matrix directly:
    //   c_rho = (1/n!) sum_{|lambda|=n} dim(lambda) chi^lambda_rho * residual(lambda).
    for (long n = 1; n <= m; ++n) {
        const auto lams = partitions_of(n);
        std::vector<Rat> residual;
        residual.reserve(lams.size());
        for (const auto& lam : lams) {
            Rat r = psum_product(mu, lam);
            for (const auto& [rho, coeff] : c) r -= coeff * central_char(rho, lam);
            residual.push_back(r);
        }
        const Rat inv_nfact = Rat(1) / Rat(factorial(n));
        for (const auto& rho : lams) {
            Rat acc(0);
            for (std::size_t i = 0; i < lams.size(); ++i)
                acc += Rat(dimension(lams[i])) * Rat(character(lams[i], rho)) * residual[i];
            acc *= inv_nfact;
            if (!acc.is_zero()) c.emplace(rho, acc);
        }
    }
    // The expansion must keep holding beyond the sizes used to solve it.
    for (long n = m + 1; n <= m + 2; ++n)
        for (const auto& lam : partitions_of(n)) {
            Rat rhs(0);
            for (const auto& [rho, coeff] : c) rhs += coeff * central_char(rho, lam);
            if (rhs != psum_product(mu, lam))
                throw consistency_error("completed_class: expansion fails at lambda = " + lam.str());
        }
    return c;
}

std::map<Partition, Rat> completed_cycle(long m) {
    if (m < 1) throw precondition_error("completed_cycle: m must be >= 1");
    return completed_class(Partition({m}));
}

std::map<Partition, Rat> completed_cycle_via_series(long m) {
    if (m < 1) throw precondition_error("completed_cycle_via_series: m must be >= 1");
    std::map<Partition, Rat> c;
    auto vars = make_vars({"z"}, {static_cast<int>(m)});
    LinForm<Rat> unit;
    unit.add("z", Rat(1));
    const Series<Rat> base = zeta_series(vars, unit);
    for (long k = 1; k <= m; ++k) {
        for (const auto& rho : partitions_of(k)) {
            // lowest possible degree is |rho| - 1 + length(rho); parity must match m
            if ((rho.size() - 1 + rho.length()) % 2 != m % 2) continue;
            Series<Rat> prod = Series<Rat>::constant(vars, Rat(1));
            for (long i = 1; i < rho.size(); ++i) prod *= base;
            for (long part : rho.parts()) {
                LinForm<Rat> scaled;
                scaled.add("z", Rat(part));
                prod *= zeta_series(vars, scaled);
            }
            Rat coeff = prod.coeff({static_cast<int>(m)}) / Rat(factorial(rho.size()));
            if (!coeff.is_zero()) c.emplace(rho, coeff);
        }
    }
    return c;
}

} // namespace hurwitz
