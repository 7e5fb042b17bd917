#ifndef GREENRING_FPLINALG_HPP
#define GREENRING_FPLINALG_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "greenring/errors.hpp"
#include "greenring/fp.hpp"

namespace greenring {

/* Dense matrix over F_p.  Rows are bit-packed for p = 2 (64 entries per
 * word) and one byte per entry otherwise.  All operations leave their
 * inputs unchanged and are safe to call from multiple threads. */
class MatrixFp {
public:
    MatrixFp(PrimeField f, std::size_t rows, std::size_t cols);
    static MatrixFp identity(PrimeField f, std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const PrimeField& field() const noexcept { return f_; }

    unsigned at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, unsigned v);

    bool operator==(const MatrixFp& o) const;

    /* layout internals, used by the elimination engine */
    std::size_t words_per_row() const noexcept { return wpr_; }
    const std::uint64_t* word_row(std::size_t i) const { return words_.data() + i * wpr_; }
    const std::uint8_t* byte_row(std::size_t i) const { return bytes_.data() + i * cols_; }
    std::uint64_t* word_row(std::size_t i) { return words_.data() + i * wpr_; }
    std::uint8_t* byte_row(std::size_t i) { return bytes_.data() + i * cols_; }

private:
    PrimeField f_;
    std::size_t rows_, cols_, wpr_;
    std::vector<std::uint64_t> words_;  // p == 2
    std::vector<std::uint8_t> bytes_;   // p > 2
};

MatrixFp matmul(const MatrixFp& a, const MatrixFp& b);
MatrixFp matpow(const MatrixFp& a, unsigned long long k);
MatrixFp subtract_identity(const MatrixFp& a);

/* Rank by Gaussian elimination with first-nonzero pivoting. */
std::size_t rank(const MatrixFp& a);

/* Multiset of Jordan block sizes of a unipotent matrix, as size -> count. */
struct JordanType {
    std::map<unsigned, unsigned long long> blocks;

    unsigned long long dim() const {
        unsigned long long d = 0;
        for (auto& [k, m] : blocks) d += static_cast<unsigned long long>(k) * m;
        return d;
    }
    bool operator==(const JordanType& o) const { return blocks == o.blocks; }
};

/* Sparse square matrix in row-compressed form; values lie in [1, p). */
struct FpCsr {
    std::size_t n = 0;
    std::vector<std::uint64_t> rowptr;  // n + 1 entries
    std::vector<std::uint32_t> col;
    std::vector<std::uint8_t> val;

    std::size_t nnz() const noexcept { return col.size(); }
};

FpCsr csr_from_dense(const MatrixFp& m, bool subtract_identity);

/* Ranks of N^1 .. N^q for nilpotent N given in sparse form.  Computed by
 * eliminating N itself and then a chain of restrictions of N to its own
 * image, so each pass works on a shrinking matrix. */
std::vector<std::size_t> nilpotent_rank_sequence(const PrimeField& f, const FpCsr& n_mat,
                                                 unsigned q);

/* Block sizes from the rank sequence of M - I: with r_0 = dim and
 * r_{q+1} = r_q, the number of blocks of size k is r_{k-1} - 2 r_k + r_{k+1}.
 * A negative count means the input ranks are inconsistent and aborts. */
JordanType jordan_type_from_ranks(std::size_t dim, unsigned q,
                                  const std::vector<std::size_t>& ranks);

/* Jordan type of a unipotent matrix M with (M - I)^q = 0; the exponent
 * condition is checked and violations are reported as errors. */
JordanType jordan_type_unipotent(const MatrixFp& m, unsigned q);

}  // namespace greenring

#endif
