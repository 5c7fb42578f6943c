#pragma once

#include "tamefit/group_ring.hpp"
#include "tamefit/ideal_lattice.hpp"
#include "tamefit/linalg.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

namespace tamefit {

/// Orders of the canonical sub- and quotient modules attached to a finite
/// module with involution.
struct SubOrders {
    Integer fixed;             // |M^G|, the kernel of 1 - tau
    Integer anti_fixed;        // |M^-|, the kernel of 1 + tau
    Integer im_one_minus_tau;  // |(1 - tau) M|
    Integer im_one_plus_tau;   // |(1 + tau) M|
};

class FiniteModulePresentation;

/// A finite abelian group given by invariant factors d_1 | d_2 | ... | d_r
/// (each >= 2) together with an involution: tau sends generator j to the
/// j-th column of the action matrix. The matrix must define an endomorphism
/// of the group whose square is the identity.
class AbelianTauModule {
  public:
    AbelianTauModule(std::vector<Integer> invariant_factors, IntMat tau_action);

    /// Checks the two structural conditions without constructing: the matrix
    /// respects the generator orders and squares to the identity on the group.
    static bool is_valid_action(const std::vector<Integer>& factors, const IntMat& action);

    std::size_t rank() const { return factors_.size(); }
    const std::vector<Integer>& invariant_factors() const { return factors_; }
    const IntMat& tau_action() const { return action_; }

    Integer order() const;
    bool is_two_group() const;

    SubOrders sub_orders() const;

    /// (|H^1|, |H^2|) for the order-2 group: |M^-| / |M^{1-tau}| and
    /// |M^G| / |M^{1+tau}|. The two orders always agree.
    std::pair<Integer, Integer> cohomology_orders() const;

    /// Group ring presentation with one generator per invariant factor:
    /// columns d_i * e_i and tau * e_j - sum_i U_ij * e_i. The cokernel is
    /// this module.
    FiniteModulePresentation presentation() const;

    /// Ann_{Z[G]}(M) as a lattice: all x + y*tau with x + y*U killing every
    /// generator, solved exactly by an integer kernel computation. Refuses
    /// modules larger than order_bound.
    GroupRingIdeal annihilator_bruteforce(const Integer& order_bound = Integer(1000000)) const;

  private:
    std::vector<Integer> factors_;
    IntMat action_;
};

/// A finite Z[G]-module presented as the cokernel of a relation matrix with
/// group ring entries: n generators, one column per relation (at least n of
/// them), every entry integral.
class FiniteModulePresentation {
  public:
    FiniteModulePresentation(std::size_t generators,
                             std::vector<std::vector<GroupRingElement>> relation_columns);

    std::size_t generators() const { return generators_; }
    const std::vector<std::vector<GroupRingElement>>& relation_columns() const {
        return columns_;
    }

    /// True when the expanded integer relation matrix (each group ring entry
    /// spread over the Z-basis (1, tau)) has full row rank 2n.
    bool has_finite_cokernel() const;

    /// The ideal generated by all n x n minors of the relation matrix, with
    /// determinants taken in the commutative ring Q[G]. Minors are
    /// enumerated exhaustively over column choices, so presentations with
    /// more than max_generators generators are refused. Throws
    /// std::domain_error when the cokernel is infinite (the Fitting ideal
    /// would be zero).
    GroupRingIdeal fitting_ideal(std::size_t max_generators = 4) const;

  private:
    std::size_t generators_;
    std::vector<std::vector<GroupRingElement>> columns_;
};

/// Generators of the annihilator of a cyclic module of order w_e on which
/// tau acts as the unit u, phrased through the two subgroup orders
/// |W^{1+tau}| = w_e / gcd(u+1, w_e) and |W^{1-tau}| = w_e / w_f:
/// two generators |W^{1+tau}|(1+tau), |W^{1-tau}|(1-tau) away from the
/// first layer, and the single generator
/// |W^{1+tau}| e+ + |W^{1-tau}| e- on it. Throws std::invalid_argument on
/// inputs that could not have come from tau_unit.
std::vector<GroupRingElement> annihilator_generators(const Integer& w_f,
                                                     const Integer& w_e,
                                                     const Integer& u,
                                                     bool first_layer);

/// Order of the element with the given coordinates (with respect to the
/// invariant-factor generators).
Integer element_order(const AbelianTauModule& m, const std::vector<Integer>& coords);

/// For a finite abelian 2-group and an element of order exactly 2, returns
/// generators of a direct product decomposition into cyclic groups of the
/// original orders such that the element lies inside a single factor:
/// 2^(c_t - 1) times the t-th returned generator equals the element. The
/// involution on m is irrelevant here; only the group structure is used.
std::vector<std::vector<Integer>> split_two_group(const AbelianTauModule& m,
                                                  std::vector<Integer> element);

/// Line-oriented module fixture blocks, as consumed by the property-test
/// harness:
///
///   factors 2 4
///   tau 1 0
///   tau 2 3
///   m 1 2
///   end
///
/// with one "tau" line per generator and the distinguished element optional.
struct ModuleFixture {
    AbelianTauModule module;
    std::optional<std::vector<Integer>> distinguished;
};

/// Reads the next fixture block; std::nullopt at end of input. Throws
/// ValidationError on malformed blocks.
std::optional<ModuleFixture> read_module_fixture(std::istream& in);
void write_module_fixture(std::ostream& out, const ModuleFixture& fixture);

}  // namespace tamefit
