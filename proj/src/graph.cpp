#include "linespect/graph.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace linespect {

LineGraphSpec::LineGraphSpec(int vertex_count, Vector edge_weights)
    : n_(vertex_count), weights_(std::move(edge_weights)) {
    if (n_ < 2)
        throw std::invalid_argument("LineGraphSpec: vertex count must be >= 2, got " +
                                    std::to_string(n_));
    if (static_cast<int>(weights_.size()) != n_ - 1)
        throw std::invalid_argument("LineGraphSpec: expected " + std::to_string(n_ - 1) +
                                    " edge weights for " + std::to_string(n_) +
                                    " vertices, got " + std::to_string(weights_.size()));
    for (std::size_t i = 0; i < weights_.size(); ++i)
        if (!(weights_[i] > 0.0))
            throw std::invalid_argument("LineGraphSpec: edge weight " + std::to_string(i + 1) +
                                        " must be positive, got " +
                                        std::to_string(weights_[i]));
}

LineGraphSpec LineGraphSpec::canonical(int vertex_count) {
    if (vertex_count < 2)
        throw std::invalid_argument("LineGraphSpec: vertex count must be >= 2, got " +
                                    std::to_string(vertex_count));
    return LineGraphSpec(vertex_count, Vector(vertex_count - 1, 1.0));
}

bool LineGraphSpec::is_canonical() const {
    for (double w : weights_)
        if (w != 1.0)
            return false;
    return true;
}

PerturbationSpec::PerturbationSpec(int m1, int m2, double epsilon)
    : m1_(m1), m2_(m2), epsilon_(epsilon) {
    if (m1_ > m2_)
        std::swap(m1_, m2_);
    if (m1_ < 1)
        throw std::invalid_argument("PerturbationSpec: vertex indices must be >= 1, got " +
                                    std::to_string(m1_));
    if (m1_ == m2_)
        throw std::invalid_argument("PerturbationSpec: m1 and m2 must be distinct, both are " +
                                    std::to_string(m1_));
}

SymmetricMatrix build_laplacian(const LineGraphSpec& graph) {
    const int n = graph.vertex_count();
    const Vector& w = graph.edge_weights();
    SymmetricMatrix l(n);
    for (int i = 0; i < n - 1; ++i) {
        l.add(i, i, w[i]);
        l.add(i + 1, i + 1, w[i]);
        l.set(i, i + 1, -w[i]);
    }
    return l;
}

SymmetricMatrix build_auxiliary_h(int order) {
    if (order < 1)
        throw std::invalid_argument("build_auxiliary_h: order must be >= 1, got " +
                                    std::to_string(order));
    SymmetricMatrix h(order);
    for (int i = 0; i < order; ++i)
        h.set(i, i, i == order - 1 ? 1.0 : 2.0);
    for (int i = 0; i < order - 1; ++i)
        h.set(i, i + 1, -1.0);
    return h;
}

SymmetricMatrix build_perturbation_matrix(const PerturbationSpec& pert, int vertex_count) {
    if (pert.m2() > vertex_count)
        throw std::invalid_argument("build_perturbation_matrix: m2 = " +
                                    std::to_string(pert.m2()) + " exceeds vertex count " +
                                    std::to_string(vertex_count));
    SymmetricMatrix m(vertex_count);
    m.set(pert.m1() - 1, pert.m1() - 1, 1.0);
    m.set(pert.m2() - 1, pert.m2() - 1, 1.0);
    m.set(pert.m1() - 1, pert.m2() - 1, -1.0);
    return m;
}

void validate_perturbation(const LineGraphSpec& graph, const PerturbationSpec& pert) {
    if (pert.m2() > graph.vertex_count())
        throw std::invalid_argument("perturbation: m2 = " + std::to_string(pert.m2()) +
                                    " exceeds vertex count " +
                                    std::to_string(graph.vertex_count()));
    if (pert.perturbs_existing_edge()) {
        const double w = graph.edge_weights()[pert.m1() - 1] + pert.epsilon();
        if (w <= 0.0)
            throw std::invalid_argument(
                "perturbation: edge (" + std::to_string(pert.m1()) + "," +
                std::to_string(pert.m2()) + ") weight would become " + std::to_string(w) +
                "; weights must stay positive");
    } else if (pert.epsilon() < 0.0) {
        throw std::invalid_argument("perturbation: new edge (" + std::to_string(pert.m1()) +
                                    "," + std::to_string(pert.m2()) +
                                    ") cannot have negative weight " +
                                    std::to_string(pert.epsilon()));
    }
}

SymmetricMatrix build_perturbed_laplacian(const LineGraphSpec& graph,
                                          const PerturbationSpec& pert) {
    validate_perturbation(graph, pert);
    SymmetricMatrix a = build_laplacian(graph);
    const double eps = pert.epsilon();
    a.add(pert.m1() - 1, pert.m1() - 1, eps);
    a.add(pert.m2() - 1, pert.m2() - 1, eps);
    a.add(pert.m1() - 1, pert.m2() - 1, -eps);
    return a;
}

} // namespace linespect
