#ifndef LINESPECT_GRAPH_HPP
#define LINESPECT_GRAPH_HPP

#include <vector>

#include "linespect/matrix.hpp"

namespace linespect {

/// A weighted undirected line (path) graph: vertices v_1..v_n, edge i
/// connecting v_i and v_{i+1} with weight weights[i-1] > 0.
///
/// Vertex indices are 1-based everywhere in the public interface.
class LineGraphSpec {
public:
    LineGraphSpec(int vertex_count, Vector edge_weights);

    /// Unit-weight line graph. Closed-form routines require this shape.
    static LineGraphSpec canonical(int vertex_count);

    int vertex_count() const { return n_; }
    const Vector& edge_weights() const { return weights_; }

    /// True iff every edge weight is exactly 1.
    bool is_canonical() const;

private:
    int n_;
    Vector weights_;
};

/// A single edge-weight perturbation: the weight between v_m1 and v_m2
/// changes by epsilon. m2 == m1+1 perturbs an existing edge, m2 > m1+1
/// creates a new edge; both yield the same rank-1 matrix structure.
class PerturbationSpec {
public:
    /// Normalizes the vertex order so that m1 < m2 afterwards.
    PerturbationSpec(int m1, int m2, double epsilon);

    int m1() const { return m1_; }
    int m2() const { return m2_; }
    double epsilon() const { return epsilon_; }

    bool perturbs_existing_edge() const { return m2_ == m1_ + 1; }

private:
    int m1_;
    int m2_;
    double epsilon_;
};

/// n x n weighted path Laplacian L = D - A. Every row sums to zero.
SymmetricMatrix build_laplacian(const LineGraphSpec& graph);

/// Tridiagonal auxiliary matrix: diagonal (2,...,2,1), off-diagonals -1.
/// Its characteristic polynomial drives the g recursion in charpoly.
SymmetricMatrix build_auxiliary_h(int order);

/// The rank-1 perturbation matrix M: entries (m1,m1) = (m2,m2) = 1,
/// (m1,m2) = (m2,m1) = -1, zero elsewhere. Equals u u^T with
/// u = e_m1 - e_m2, so trace(M) = 2 and M annihilates constants.
SymmetricMatrix build_perturbation_matrix(const PerturbationSpec& pert, int vertex_count);

/// A(eps) = L + eps * M. Rejects perturbations that drive an edge weight
/// negative (or an existing edge weight to zero or below).
SymmetricMatrix build_perturbed_laplacian(const LineGraphSpec& graph,
                                          const PerturbationSpec& pert);

/// Shared precondition check for operations combining a graph with a
/// perturbation: m2 <= n and the effective edge weight stays valid.
void validate_perturbation(const LineGraphSpec& graph, const PerturbationSpec& pert);

} // namespace linespect

#endif
