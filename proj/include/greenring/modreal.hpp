#ifndef GREENRING_MODREAL_HPP
#define GREENRING_MODREAL_HPP

#include "greenring/fplinalg.hpp"
#include "greenring/greenring.hpp"

namespace greenring {

/* A module given by the explicit matrix action of the fixed generator g.
 * The generator is unipotent with (gen - I)^q = 0; dimension 0 is legal. */
struct ModuleRep {
    const GreenContext* ctx = nullptr;
    MatrixFp gen;

    std::size_t dim() const noexcept { return gen.rows(); }
};

/* V_r as a single unipotent block: generator I + N with N e_i = e_{i+1},
 * N e_r = 0. */
ModuleRep indecomposable(const GreenContext& ctx, unsigned r);

ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b);
ModuleRep tensor(const ModuleRep& a, const ModuleRep& b);

/* Powers on the ordered wedge basis {e_{i_1} ^ ... ^ e_{i_n}, i_1 < ... < i_n}
 * and the monomial basis (sorted index multisets, lex order).  n = 0 gives
 * the trivial one-dimensional module.  Results above the context cap raise
 * CapExceededError naming the blocking object. */
ModuleRep exterior_power(const ModuleRep& a, unsigned long long n);
ModuleRep symmetric_power(const ModuleRep& a, unsigned long long n);

/* Jordan type of the generator, expressed in the basis classes. */
GreenElement decompose(const ModuleRep& a);

/* Sparse fast path for powers of the single block V_r: returns gen - I of
 * the power module directly in sparse form, expanding only products whose
 * binomials survive mod p. */
FpCsr exterior_power_block_csr(const GreenContext& ctx, unsigned r, unsigned long long n);
FpCsr symmetric_power_block_csr(const GreenContext& ctx, unsigned r, unsigned long long n);

/* Decomposition from the sparse shifted generator (the matrix N = gen - I). */
GreenElement decompose_nilpotent(const GreenContext& ctx, const FpCsr& shifted_gen);

}  // namespace greenring

#endif
