#pragma once

// Finite-dimensional representations of an acyclic quiver over a prime field
// F_q, with the small dense linear algebra the counting backend runs on.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hall {

bool is_prime(long n);

// Arithmetic mod a prime q (q small; entries stay in [0, q)).
struct Fq {
    long q;
    explicit Fq(long q_) : q(q_) {
        if (!is_prime(q_)) throw std::invalid_argument("q must be prime, got " + std::to_string(q_));
    }
    long add(long a, long b) const { return (a + b) % q; }
    long sub(long a, long b) const { return (a - b % q + q) % q; }
    long mul(long a, long b) const { return (a * b) % q; }
    long neg(long a) const { return (q - a % q) % q; }
    long inv(long a) const;
};

struct FqMat {
    int rows = 0, cols = 0;
    std::vector<int16_t> a;  // row-major, values in [0, q)

    FqMat() = default;
    FqMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    int16_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    int16_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static FqMat identity(int n);
    bool operator==(const FqMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

FqMat mat_mul(const Fq& F, const FqMat& x, const FqMat& y);
FqMat mat_add(const Fq& F, const FqMat& x, const FqMat& y);
FqMat mat_sub(const Fq& F, const FqMat& x, const FqMat& y);
int mat_rank(const Fq& F, FqMat m);
bool mat_invertible(const Fq& F, const FqMat& m);
// Basis of { x : m x = 0 } as columns.
std::vector<std::vector<int16_t>> mat_nullspace(const Fq& F, FqMat m);
// Reduced row echelon form; returns pivot column indices.
std::vector<int> mat_rref(const Fq& F, FqMat& m);

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<std::pair<int, int>> arrows;  // (source index, target index)

    int num_vertices() const { return static_cast<int>(vertices.size()); }
    // Throws std::invalid_argument on duplicate labels or directed cycles.
    void validate() const;
    std::string digest() const;  // stable hex digest of the shape
};

// One representation: a dimension per vertex plus a matrix per arrow shaped
// target_dim x source_dim.
struct Rep {
    std::vector<int> dims;
    std::vector<FqMat> mats;  // parallel to quiver.arrows

    int total_dim() const {
        int s = 0;
        for (int d : dims) s += d;
        return s;
    }
    bool is_zero() const { return total_dim() == 0; }
};

Rep rep_direct_sum(const Quiver& Q, const Rep& x, const Rep& y);

// Morphisms x -> y as one matrix per vertex (dims_y[i] x dims_x[i]).
using RepMap = std::vector<FqMat>;

// Basis of the intertwiner space Hom(x, y); each element is a RepMap.
std::vector<RepMap> hom_basis(const Quiver& Q, const Fq& F, const Rep& x, const Rep& y);

}  // namespace hall
