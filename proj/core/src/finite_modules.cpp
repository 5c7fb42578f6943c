#include "tamefit/finite_modules.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace tamefit {

namespace {

// Entry (i, j) reduced modulo the order of the target generator i.
Integer reduce_entry(const Integer& value, const Integer& modulus) {
    Integer r = value % modulus;
    if (r < 0) r += modulus;
    return r;
}

// A == identity as an endomorphism of the group with the given generator
// orders: every column must agree with the standard basis vector modulo the
// per-row orders.
bool acts_as_identity(const std::vector<Integer>& factors, const IntMat& a) {
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = 0; j < factors.size(); ++j) {
            Integer want = i == j ? 1 : 0;
            if ((a.at(i, j) - want) % factors[i] != 0) return false;
        }
    return true;
}

}  // namespace

bool AbelianTauModule::is_valid_action(const std::vector<Integer>& factors,
                                       const IntMat& action) {
    const std::size_t r = factors.size();
    if (action.rows() != r || action.cols() != r) return false;
    // d_i | d_j * U_ij: the image of a generator of order d_j must have
    // order dividing d_j.
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            if ((factors[j] * action.at(i, j)) % factors[i] != 0) return false;
    return acts_as_identity(factors, action * action);
}

AbelianTauModule::AbelianTauModule(std::vector<Integer> invariant_factors, IntMat tau_action)
    : factors_(std::move(invariant_factors)), action_(std::move(tau_action)) {
    if (factors_.empty())
        throw std::invalid_argument("AbelianTauModule: no invariant factors");
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] < 2)
            throw std::invalid_argument("AbelianTauModule: invariant factor < 2");
        if (i > 0 && factors_[i] % factors_[i - 1] != 0)
            throw std::invalid_argument(
                "AbelianTauModule: invariant factors must form a divisibility chain");
    }
    if (!is_valid_action(factors_, action_))
        throw std::invalid_argument(
            "AbelianTauModule: matrix is not an involution of the group");
    for (std::size_t i = 0; i < factors_.size(); ++i)
        for (std::size_t j = 0; j < factors_.size(); ++j)
            action_.at(i, j) = reduce_entry(action_.at(i, j), factors_[i]);
}

Integer AbelianTauModule::order() const {
    Integer n = 1;
    for (const Integer& d : factors_) n *= d;
    return n;
}

bool AbelianTauModule::is_two_group() const {
    for (const Integer& d : factors_)
        if (odd_part(d) != 1) return false;
    return true;
}

SubOrders AbelianTauModule::sub_orders() const {
    const std::size_t r = rank();
    // |ker(A on M)| = [Z^r : A Z^r + D Z^r] for the diagonal D of orders:
    // the image has order |M| / [Z^r : span], and kernel and image orders
    // multiply to |M|.
    auto kernel_order = [&](int sign) {
        IntMat span(2 * r, r);
        for (std::size_t j = 0; j < r; ++j) {
            for (std::size_t i = 0; i < r; ++i) {
                span.at(j, i) = action_.at(i, j);  // column j of the action
                if (i == j) span.at(j, i) += sign;
            }
            span.at(r + j, j) = factors_[j];
        }
        return row_lattice_index(span);
    };
    SubOrders s;
    Integer n = order();
    s.fixed = kernel_order(-1);      // kernel of tau - 1
    s.anti_fixed = kernel_order(+1); // kernel of tau + 1
    s.im_one_minus_tau = n / s.fixed;
    s.im_one_plus_tau = n / s.anti_fixed;
    return s;
}

std::pair<Integer, Integer> AbelianTauModule::cohomology_orders() const {
    SubOrders s = sub_orders();
    if (s.anti_fixed % s.im_one_minus_tau != 0 || s.fixed % s.im_one_plus_tau != 0)
        throw std::logic_error("cohomology_orders: image not contained in kernel");
    return {s.anti_fixed / s.im_one_minus_tau, s.fixed / s.im_one_plus_tau};
}

FiniteModulePresentation AbelianTauModule::presentation() const {
    const std::size_t r = rank();
    std::vector<std::vector<GroupRingElement>> columns;
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<GroupRingElement> col(r);
        col[i] = GroupRingElement(Rational(factors_[i]), Rational(0));
        columns.push_back(std::move(col));
    }
    for (std::size_t j = 0; j < r; ++j) {
        std::vector<GroupRingElement> col(r);
        for (std::size_t i = 0; i < r; ++i) {
            Rational one = -Rational(action_.at(i, j));
            Rational tau = i == j ? Rational(1) : Rational(0);
            col[i] = GroupRingElement(one, tau);
        }
        columns.push_back(std::move(col));
    }
    return FiniteModulePresentation(r, std::move(columns));
}

GroupRingIdeal AbelianTauModule::annihilator_bruteforce(const Integer& order_bound) const {
    if (order() > order_bound)
        throw std::domain_error("annihilator_bruteforce: module order exceeds bound");
    const std::size_t r = rank();
    const std::size_t m = r * r;
    // x + y*tau annihilates M  <=>  for all (i, j):
    //   x*delta_ij + y*U_ij == 0 mod d_i.
    // Solve as the left kernel of a (2 + m) x m integer matrix whose last m
    // rows carry the moduli, then project to the (x, y) coordinates.
    IntMat sys(2 + m, m);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            std::size_t col = i * r + j;
            sys.at(0, col) = i == j ? 1 : 0;
            sys.at(1, col) = action_.at(i, j);
            sys.at(2 + col, col) = factors_[i];
        }
    IntMat kernel = left_kernel(sys);
    std::vector<GroupRingElement> gens;
    for (std::size_t i = 0; i < kernel.rows(); ++i)
        gens.emplace_back(Rational(kernel.at(i, 0)), Rational(kernel.at(i, 1)));
    return GroupRingIdeal::from_generators(gens);
}

FiniteModulePresentation::FiniteModulePresentation(
    std::size_t generators, std::vector<std::vector<GroupRingElement>> relation_columns)
    : generators_(generators), columns_(std::move(relation_columns)) {
    if (generators_ == 0)
        throw std::invalid_argument("FiniteModulePresentation: no generators");
    if (columns_.size() < generators_)
        throw std::invalid_argument(
            "FiniteModulePresentation: fewer relations than generators");
    for (const auto& col : columns_) {
        if (col.size() != generators_)
            throw std::invalid_argument("FiniteModulePresentation: ragged column");
        for (const GroupRingElement& e : col)
            if (!e.is_integral())
                throw std::invalid_argument(
                    "FiniteModulePresentation: non-integral relation entry");
    }
}

bool FiniteModulePresentation::has_finite_cokernel() const {
    // Expand over the Z-basis (1, tau) of each generator: every relation
    // column contributes two integer columns (the relation and tau times it).
    const std::size_t n = generators_;
    IntMat rows(2 * columns_.size(), 2 * n);
    for (std::size_t c = 0; c < columns_.size(); ++c)
        for (std::size_t i = 0; i < n; ++i) {
            const GroupRingElement& e = columns_[c][i];
            Integer one = e.coeff_one().get_num();
            Integer tau = e.coeff_tau().get_num();
            rows.at(2 * c, 2 * i) = one;
            rows.at(2 * c, 2 * i + 1) = tau;
            rows.at(2 * c + 1, 2 * i) = tau;
            rows.at(2 * c + 1, 2 * i + 1) = one;
        }
    return row_hermite_form(rows).rows() == 2 * n;
}

namespace {

GroupRingElement determinant(const std::vector<std::vector<GroupRingElement>>& cols,
                             const std::vector<std::size_t>& picks, std::size_t n) {
    // Cofactor expansion along the first remaining column; n <= 4 keeps
    // this comfortably exact and cheap.
    struct Expander {
        const std::vector<std::vector<GroupRingElement>>& cols;
        GroupRingElement expand(const std::vector<std::size_t>& use_cols,
                                const std::vector<std::size_t>& use_rows) {
            if (use_cols.size() == 1)
                return cols[use_cols[0]][use_rows[0]];
            GroupRingElement det;
            std::vector<std::size_t> sub_cols(use_cols.begin() + 1, use_cols.end());
            for (std::size_t k = 0; k < use_rows.size(); ++k) {
                const GroupRingElement& pivot = cols[use_cols[0]][use_rows[k]];
                if (pivot.is_zero()) continue;
                std::vector<std::size_t> sub_rows;
                for (std::size_t t = 0; t < use_rows.size(); ++t)
                    if (t != k) sub_rows.push_back(use_rows[t]);
                GroupRingElement minor = expand(sub_cols, sub_rows);
                GroupRingElement term = pivot * minor;
                det = (k % 2 == 0) ? det + term : det - term;
            }
            return det;
        }
    };
    std::vector<std::size_t> all_rows(n);
    for (std::size_t i = 0; i < n; ++i) all_rows[i] = i;
    return Expander{cols}.expand(picks, all_rows);
}

}  // namespace

GroupRingIdeal FiniteModulePresentation::fitting_ideal(std::size_t max_generators) const {
    if (generators_ > max_generators)
        throw std::domain_error(
            "fitting_ideal: presentation exceeds the exhaustive-minor bound");
    if (!has_finite_cokernel())
        throw std::domain_error("fitting_ideal: cokernel is infinite");

    const std::size_t n = generators_;
    const std::size_t m = columns_.size();
    std::vector<GroupRingElement> minors;
    std::vector<std::size_t> picks(n);
    // iterate over all n-subsets of the m columns
    for (std::size_t i = 0; i < n; ++i) picks[i] = i;
    while (true) {
        minors.push_back(determinant(columns_, picks, n));
        std::size_t k = n;
        while (k > 0 && picks[k - 1] == m - n + k - 1) --k;
        if (k == 0) break;
        ++picks[k - 1];
        for (std::size_t t = k; t < n; ++t) picks[t] = picks[t - 1] + 1;
    }
    return GroupRingIdeal::from_generators(minors);
}

std::vector<GroupRingElement> annihilator_generators(const Integer& w_f,
                                                     const Integer& w_e,
                                                     const Integer& u,
                                                     bool first_layer) {
    if (w_f < 1 || w_e < 1 || w_e % w_f != 0 || w_f % 8 != 0)
        throw std::invalid_argument("annihilator_generators: bad w-orders");
    if ((u * u - 1) % w_e != 0)
        throw std::invalid_argument("annihilator_generators: u^2 != 1 mod w_e");
    if (gcd(u - 1, w_e) != w_f)
        throw std::invalid_argument(
            "annihilator_generators: u does not fix exactly the w_f-part");
    bool two_part_shifts = v2(w_e) == v2(w_f) + 1;
    if (first_layer ? !two_part_shifts : v2(w_e) != v2(w_f))
        throw std::invalid_argument(
            "annihilator_generators: first-layer flag inconsistent with the "
            "2-parts of the w-orders");

    Integer order_plus = w_e / gcd(u + 1, w_e);  // |W^{1+tau}|
    Integer order_minus = w_e / w_f;             // |W^{1-tau}|
    if (!first_layer) {
        GroupRingElement plus{Rational(order_plus), Rational(order_plus)};
        GroupRingElement minus{Rational(order_minus), Rational(-order_minus)};
        return {plus, minus};
    }
    Rational p(order_plus), m(order_minus);
    return {GroupRingElement::from_components({p, m})};
}

Integer element_order(const AbelianTauModule& m, const std::vector<Integer>& coords) {
    if (coords.size() != m.rank())
        throw std::invalid_argument("element_order: coordinate count mismatch");
    Integer result = 1;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        const Integer& d = m.invariant_factors()[i];
        Integer c = reduce_entry(coords[i], d);
        result = lcm(result, d / gcd(c, d));
    }
    return result;
}

std::vector<std::vector<Integer>> split_two_group(const AbelianTauModule& m,
                                                  std::vector<Integer> element) {
    if (!m.is_two_group())
        throw std::invalid_argument("split_two_group: module is not a 2-group");
    const std::size_t r = m.rank();
    if (element.size() != r)
        throw std::invalid_argument("split_two_group: coordinate count mismatch");
    for (std::size_t i = 0; i < r; ++i)
        element[i] = reduce_entry(element[i], m.invariant_factors()[i]);
    if (element_order(m, element) != 2)
        throw std::invalid_argument("split_two_group: element does not have order 2");

    // Order 2 forces coordinate i to be 0 or d_i/2; record which.
    std::vector<bool> eps(r);
    for (std::size_t i = 0; i < r; ++i)
        eps[i] = element[i] != 0;
    std::size_t t = 0;
    while (!eps[t]) ++t;

    std::vector<std::vector<Integer>> basis;
    const Integer& d_t = m.invariant_factors()[t];
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<Integer> gen(r, Integer(0));
        if (i == t) {
            gen[t] = 1;
            // shift the later epsilon bits down so that 2^(c_t - 1) * gen
            // reproduces the element coordinatewise
            for (std::size_t j = t + 1; j < r; ++j)
                if (eps[j]) gen[j] = m.invariant_factors()[j] / d_t;
        } else {
            gen[i] = 1;
        }
        basis.push_back(std::move(gen));
    }
    return basis;
}

std::optional<ModuleFixture> read_module_fixture(std::istream& in) {
    std::vector<Integer> factors;
    std::vector<std::vector<Integer>> tau_rows;
    std::optional<std::vector<Integer>> distinguished;
    bool saw_any = false;

    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key) || key.starts_with("#")) continue;
        auto read_integers = [&] {
            std::vector<Integer> values;
            std::string token;
            while (ls >> token) {
                try {
                    values.emplace_back(token, 10);
                } catch (const std::invalid_argument&) {
                    throw ValidationError("module fixture: bad integer '" + token + "'");
                }
            }
            return values;
        };
        if (key == "factors") {
            factors = read_integers();
            saw_any = true;
        } else if (key == "tau") {
            tau_rows.push_back(read_integers());
            saw_any = true;
        } else if (key == "m") {
            distinguished = read_integers();
            saw_any = true;
        } else if (key == "end") {
            saw_any = true;
            break;
        } else {
            throw ValidationError("module fixture: unknown key '" + key + "'");
        }
    }
    if (!saw_any) return std::nullopt;
    if (factors.empty())
        throw ValidationError("module fixture: missing factors line");
    const std::size_t r = factors.size();
    if (tau_rows.size() != r)
        throw ValidationError("module fixture: expected one tau line per factor");
    IntMat action(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        if (tau_rows[i].size() != r)
            throw ValidationError("module fixture: tau row of wrong length");
        for (std::size_t j = 0; j < r; ++j) action.at(i, j) = tau_rows[i][j];
    }
    if (distinguished && distinguished->size() != r)
        throw ValidationError("module fixture: m line of wrong length");
    try {
        return ModuleFixture{AbelianTauModule(std::move(factors), std::move(action)),
                             std::move(distinguished)};
    } catch (const std::invalid_argument& e) {
        throw ValidationError(std::string("module fixture: ") + e.what());
    }
}

void write_module_fixture(std::ostream& out, const ModuleFixture& fixture) {
    const AbelianTauModule& m = fixture.module;
    out << "factors";
    for (const Integer& d : m.invariant_factors()) out << ' ' << d;
    out << '\n';
    for (std::size_t i = 0; i < m.rank(); ++i) {
        out << "tau";
        for (std::size_t j = 0; j < m.rank(); ++j) out << ' ' << m.tau_action().at(i, j);
        out << '\n';
    }
    if (fixture.distinguished) {
        out << "m";
        for (const Integer& c : *fixture.distinguished) out << ' ' << c;
        out << '\n';
    }
    out << "end\n";
}

}  // namespace tamefit
