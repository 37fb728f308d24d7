#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "phsq/errors.hpp"

namespace phsq {

using vertex_t = int;
// Filtration stages are 1-based: the i-th simplex of a filtration has stage i.
using index_t = std::int64_t;

// A simplex is a strictly ascending tuple of nonnegative vertex ids.
class simplex {
public:
    simplex() = default;
    explicit simplex(std::vector<vertex_t> vertices);
    simplex(std::initializer_list<vertex_t> vertices);

    std::size_t cardinality() const { return vertices_.size(); }
    int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
    std::span<const vertex_t> vertices() const { return vertices_; }
    vertex_t operator[](std::size_t i) const { return vertices_[i]; }

    bool contains(vertex_t v) const;
    // Number of vertices of this simplex strictly smaller than v; v must be a member.
    std::size_t position_of(vertex_t v) const;

    std::vector<simplex> facets() const;      // codimension-1 faces
    simplex front_face(std::size_t p) const;  // first p+1 vertices
    simplex back_face(std::size_t q) const;   // last q+1 vertices

    friend bool operator==(const simplex& a, const simplex& b) { return a.vertices_ == b.vertices_; }
    friend bool operator<(const simplex& a, const simplex& b) { return a.vertices_ < b.vertices_; }

    friend simplex simplex_union(const simplex& a, const simplex& b);
    friend simplex simplex_difference(const simplex& a, const simplex& b);

private:
    struct unchecked_tag {};
    simplex(unchecked_tag, std::vector<vertex_t> v) : vertices_(std::move(v)) {}

    std::vector<vertex_t> vertices_;
};

simplex simplex_union(const simplex& a, const simplex& b);
simplex simplex_difference(const simplex& a, const simplex& b);  // a minus b

std::ostream& operator<<(std::ostream& os, const simplex& s);

struct simplex_hash {
    std::size_t operator()(const simplex& s) const;
};

// A finite simplicial complex listed in simplexwise-filtration order: every
// prefix of the simplex sequence is itself a closed complex. Immutable once
// built and safe to share read-only across threads.
class filtered_complex {
public:
    filtered_complex() = default;

    // Validates closure, ordering and uniqueness; stages are assigned 1..n in
    // input order.
    static filtered_complex build(std::vector<simplex> simplices);

    index_t size() const { return static_cast<index_t>(simplices_.size()); }
    bool empty() const { return simplices_.empty(); }
    int dimension() const { return dimension_; }

    const simplex& at(index_t stage) const;  // 1-based
    std::optional<index_t> stage_of(const simplex& s) const;
    bool contains(const simplex& s) const { return stage_.count(s) > 0; }

    std::span<const simplex> simplices() const { return simplices_; }
    // Stages of the d-simplices, ascending; empty span for out-of-range d.
    std::span<const index_t> stages_of_dimension(int d) const;

    // The subcomplex X_stage spanned by the first `stage` simplices.
    filtered_complex prefix(index_t stage) const;

private:
    std::vector<simplex> simplices_;
    std::unordered_map<simplex, index_t, simplex_hash> stage_;
    std::vector<std::vector<index_t>> by_dimension_;
    int dimension_ = -1;
};

// Homogeneous F2 cochain: the set of degree-d simplices where it is 1. The
// degree is carried explicitly so empty cochains of different degrees differ.
class cochain {
public:
    explicit cochain(int degree);
    cochain(int degree, std::vector<simplex> support);

    int degree() const { return degree_; }
    bool empty() const { return support_.empty(); }
    std::size_t size() const { return support_.size(); }
    std::span<const simplex> support() const { return support_; }

    bool contains(const simplex& s) const;
    void toggle(const simplex& s);  // flip the coefficient at s

    // Sum over F2 = symmetric difference of supports; degrees must agree.
    friend cochain operator+(const cochain& a, const cochain& b);
    friend bool operator==(const cochain& a, const cochain& b) {
        return a.degree_ == b.degree_ && a.support_ == b.support_;
    }

private:
    int degree_ = 0;
    std::vector<simplex> support_;  // sorted, unique
};

std::ostream& operator<<(std::ostream& os, const cochain& c);

// Coboundary operator: coefficient of each (d+1)-simplex is the parity of its
// facets lying in the support of `a`.
cochain coboundary(const filtered_complex& x, const cochain& a);

// True iff every support simplex of `a` belongs to `x`.
bool is_supported_on(const filtered_complex& x, const cochain& a);

}  // namespace phsq
