#include "phsq/simplicial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace phsq {

const char* errc_name(errc code) {
    switch (code) {
        case errc::malformed_simplex: return "malformed_simplex";
        case errc::duplicate_simplex: return "duplicate_simplex";
        case errc::not_closed: return "not_closed";
        case errc::not_member: return "not_member";
        case errc::not_subset: return "not_subset";
        case errc::unsupported_cochain: return "unsupported_cochain";
        case errc::invalid_k: return "invalid_k";
        case errc::length_mismatch: return "length_mismatch";
        case errc::degree_mismatch: return "degree_mismatch";
        case errc::mixed_degrees: return "mixed_degrees";
        case errc::missing_degree: return "missing_degree";
        case errc::not_cocycle: return "not_cocycle";
        case errc::parse_error: return "parse_error";
        case errc::stage_out_of_range: return "stage_out_of_range";
        case errc::query_out_of_range: return "query_out_of_range";
        case errc::solve_failed: return "solve_failed";
        case errc::inconsistent_input: return "inconsistent_input";
    }
    return "unknown";
}

namespace {

std::string describe(const std::vector<vertex_t>& verts) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (i) os << ',';
        os << verts[i];
    }
    os << '}';
    return os.str();
}

}  // namespace

simplex::simplex(std::vector<vertex_t> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty())
        throw input_error(errc::malformed_simplex, "simplex must have at least one vertex");
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (vertices_[i] < 0)
            throw input_error(errc::malformed_simplex,
                              "negative vertex id in " + describe(vertices_));
        if (i > 0 && vertices_[i - 1] >= vertices_[i])
            throw input_error(errc::malformed_simplex,
                              "vertices not strictly ascending in " + describe(vertices_));
    }
}

simplex::simplex(std::initializer_list<vertex_t> vertices)
    : simplex(std::vector<vertex_t>(vertices)) {}

bool simplex::contains(vertex_t v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::size_t simplex::position_of(vertex_t v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v)
        throw input_error(errc::not_member,
                          "vertex " + std::to_string(v) + " not in " + describe(vertices_));
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::vector<simplex> simplex::facets() const {
    std::vector<simplex> out;
    if (vertices_.size() < 2) return out;
    out.reserve(vertices_.size());
    for (std::size_t skip = 0; skip < vertices_.size(); ++skip) {
        std::vector<vertex_t> f;
        f.reserve(vertices_.size() - 1);
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            if (i != skip) f.push_back(vertices_[i]);
        out.push_back(simplex(unchecked_tag{}, std::move(f)));
    }
    return out;
}

simplex simplex::front_face(std::size_t p) const {
    return simplex(unchecked_tag{},
                   std::vector<vertex_t>(vertices_.begin(), vertices_.begin() + (p + 1)));
}

simplex simplex::back_face(std::size_t q) const {
    return simplex(unchecked_tag{},
                   std::vector<vertex_t>(vertices_.end() - (q + 1), vertices_.end()));
}

simplex simplex_union(const simplex& a, const simplex& b) {
    std::vector<vertex_t> out;
    out.reserve(a.cardinality() + b.cardinality());
    std::set_union(a.vertices_.begin(), a.vertices_.end(), b.vertices_.begin(),
                   b.vertices_.end(), std::back_inserter(out));
    return simplex(simplex::unchecked_tag{}, std::move(out));
}

simplex simplex_difference(const simplex& a, const simplex& b) {
    std::vector<vertex_t> out;
    std::set_difference(a.vertices_.begin(), a.vertices_.end(), b.vertices_.begin(),
                        b.vertices_.end(), std::back_inserter(out));
    return simplex(simplex::unchecked_tag{}, std::move(out));
}

std::ostream& operator<<(std::ostream& os, const simplex& s) {
    os << '{';
    for (std::size_t i = 0; i < s.cardinality(); ++i) {
        if (i) os << ',';
        os << s[i];
    }
    return os << '}';
}

std::size_t simplex_hash::operator()(const simplex& s) const {
    // FNV-1a over the vertex ids
    std::uint64_t h = 1469598103934665603ull;
    for (vertex_t v : s.vertices()) {
        h ^= static_cast<std::uint64_t>(v) + 1;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

filtered_complex filtered_complex::build(std::vector<simplex> simplices) {
    filtered_complex x;
    x.simplices_ = std::move(simplices);
    x.stage_.reserve(x.simplices_.size() * 2);
    for (std::size_t idx = 0; idx < x.simplices_.size(); ++idx) {
        const simplex& s = x.simplices_[idx];
        index_t stage = static_cast<index_t>(idx) + 1;
        std::ostringstream where;
        if (x.stage_.count(s)) {
            where << "duplicate simplex " << s << " at stage " << stage;
            throw input_error(errc::duplicate_simplex, where.str());
        }
        // Facets present earlier suffice: closure of all faces follows by induction.
        for (const simplex& f : s.facets()) {
            if (!x.stage_.count(f)) {
                where << "face " << f << " of " << s << " missing before stage " << stage;
                throw input_error(errc::not_closed, where.str());
            }
        }
        x.stage_.emplace(s, stage);
        int d = s.dimension();
        if (d >= static_cast<int>(x.by_dimension_.size()))
            x.by_dimension_.resize(static_cast<std::size_t>(d) + 1);
        x.by_dimension_[static_cast<std::size_t>(d)].push_back(stage);
        x.dimension_ = std::max(x.dimension_, d);
    }
    return x;
}

const simplex& filtered_complex::at(index_t stage) const {
    if (stage < 1 || stage > size())
        throw input_error(errc::stage_out_of_range,
                          "stage " + std::to_string(stage) + " outside 1.." + std::to_string(size()));
    return simplices_[static_cast<std::size_t>(stage - 1)];
}

std::optional<index_t> filtered_complex::stage_of(const simplex& s) const {
    auto it = stage_.find(s);
    if (it == stage_.end()) return std::nullopt;
    return it->second;
}

std::span<const index_t> filtered_complex::stages_of_dimension(int d) const {
    if (d < 0 || d >= static_cast<int>(by_dimension_.size())) return {};
    return by_dimension_[static_cast<std::size_t>(d)];
}

filtered_complex filtered_complex::prefix(index_t stage) const {
    if (stage < 0 || stage > size())
        throw input_error(errc::stage_out_of_range,
                          "prefix stage " + std::to_string(stage) + " outside 0.." +
                              std::to_string(size()));
    std::vector<simplex> head(simplices_.begin(), simplices_.begin() + stage);
    return build(std::move(head));
}

cochain::cochain(int degree) : degree_(degree) {
    if (degree < 0)
        throw input_error(errc::unsupported_cochain, "cochain degree must be nonnegative");
}

cochain::cochain(int degree, std::vector<simplex> support) : cochain(degree) {
    support_ = std::move(support);
    std::sort(support_.begin(), support_.end());
    for (std::size_t i = 0; i < support_.size(); ++i) {
        if (support_[i].dimension() != degree_) {
            std::ostringstream os;
            os << "simplex " << support_[i] << " has dimension " << support_[i].dimension()
               << ", expected " << degree_;
            throw input_error(errc::mixed_degrees, os.str());
        }
        if (i > 0 && support_[i - 1] == support_[i]) {
            std::ostringstream os;
            os << "duplicate simplex " << support_[i] << " in cochain support";
            throw input_error(errc::duplicate_simplex, os.str());
        }
    }
}

bool cochain::contains(const simplex& s) const {
    return std::binary_search(support_.begin(), support_.end(), s);
}

void cochain::toggle(const simplex& s) {
    if (s.dimension() != degree_)
        throw input_error(errc::degree_mismatch, "toggled simplex has wrong dimension");
    auto it = std::lower_bound(support_.begin(), support_.end(), s);
    if (it != support_.end() && *it == s)
        support_.erase(it);
    else
        support_.insert(it, s);
}

cochain operator+(const cochain& a, const cochain& b) {
    if (a.degree_ != b.degree_)
        throw input_error(errc::degree_mismatch, "cochain degrees differ in sum");
    cochain out(a.degree_);
    std::set_symmetric_difference(a.support_.begin(), a.support_.end(), b.support_.begin(),
                                  b.support_.end(), std::back_inserter(out.support_));
    return out;
}

std::ostream& operator<<(std::ostream& os, const cochain& c) {
    os << "deg" << c.degree() << '[';
    for (std::size_t i = 0; i < c.support().size(); ++i) {
        if (i) os << ' ';
        os << c.support()[i];
    }
    return os << ']';
}

bool is_supported_on(const filtered_complex& x, const cochain& a) {
    for (const simplex& s : a.support())
        if (!x.contains(s)) return false;
    return true;
}

cochain coboundary(const filtered_complex& x, const cochain& a) {
    if (!is_supported_on(x, a))
        throw input_error(errc::unsupported_cochain, "cochain not supported on the complex");
    std::vector<simplex> hits;
    for (index_t stage : x.stages_of_dimension(a.degree() + 1)) {
        const simplex& c = x.at(stage);
        unsigned parity = 0;
        for (const simplex& f : c.facets())
            if (a.contains(f)) parity ^= 1;
        if (parity) hits.push_back(c);
    }
    return cochain(a.degree() + 1, std::move(hits));
}

}  // namespace phsq
