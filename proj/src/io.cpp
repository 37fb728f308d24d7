#include "phsq/io.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace phsq {

namespace {

using ordered_json = nlohmann::ordered_json;

struct line_scanner {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t line_no = 0;

    // next non-empty line with comments stripped
    std::optional<std::string_view> next() {
        while (pos < text.size()) {
            std::size_t eol = text.find('\n', pos);
            if (eol == std::string_view::npos) eol = text.size();
            std::string_view line = text.substr(pos, eol - pos);
            pos = eol + 1;
            ++line_no;
            if (auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
                line.remove_suffix(1);
            while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
                line.remove_prefix(1);
            if (!line.empty()) return line;
        }
        return std::nullopt;
    }
};

std::vector<vertex_t> parse_vertex_line(std::string_view line, std::size_t line_no) {
    std::vector<vertex_t> verts;
    std::size_t col = 0;
    while (col < line.size()) {
        while (col < line.size() && (line[col] == ' ' || line[col] == '\t')) ++col;
        if (col >= line.size()) break;
        std::size_t start = col;
        while (col < line.size() && line[col] != ' ' && line[col] != '\t') ++col;
        std::string token(line.substr(start, col - start));
        try {
            std::size_t used = 0;
            long value = std::stol(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            verts.push_back(static_cast<vertex_t>(value));
        } catch (const std::exception&) {
            throw input_error(errc::parse_error, "line " + std::to_string(line_no) + ", column " +
                                                     std::to_string(start + 1) +
                                                     ": expected an integer, got '" + token + "'");
        }
    }
    return verts;
}

}  // namespace

filtered_complex parse_complex_file(std::string_view text) {
    line_scanner scan{text};
    std::vector<simplex> simplices;
    while (auto line = scan.next()) {
        try {
            simplices.push_back(simplex(parse_vertex_line(*line, scan.line_no)));
        } catch (const input_error& e) {
            if (e.code() != errc::malformed_simplex) throw;
            throw input_error(errc::malformed_simplex,
                              "line " + std::to_string(scan.line_no) + ": " + e.what());
        }
    }
    return filtered_complex::build(std::move(simplices));
}

cochain parse_cochain_file(std::string_view text, const filtered_complex& x,
                           std::optional<int> degree) {
    line_scanner scan{text};
    std::vector<simplex> support;
    while (auto line = scan.next()) {
        simplex s(parse_vertex_line(*line, scan.line_no));
        if (!x.contains(s)) {
            std::ostringstream os;
            os << "line " << scan.line_no << ": simplex " << s << " not in the complex";
            throw input_error(errc::unsupported_cochain, os.str());
        }
        if (!support.empty() && s.dimension() != support.front().dimension())
            throw input_error(errc::mixed_degrees,
                              "line " + std::to_string(scan.line_no) +
                                  ": simplex dimension differs from earlier lines");
        support.push_back(std::move(s));
    }
    if (support.empty()) {
        if (!degree)
            throw input_error(errc::missing_degree,
                              "empty cochain needs an explicit degree flag");
        return cochain(*degree);
    }
    int d = support.front().dimension();
    if (degree && *degree != d)
        throw input_error(errc::degree_mismatch, "cochain degree differs from the flag");
    return cochain(d, std::move(support));
}

point_cloud parse_points_csv(std::string_view text) {
    line_scanner scan{text};
    point_cloud cloud;
    bool first = true;
    while (auto line = scan.next()) {
        std::vector<double> coords;
        std::size_t start = 0;
        bool numeric = true;
        std::string row(*line);
        while (start <= row.size()) {
            std::size_t comma = row.find(',', start);
            if (comma == std::string::npos) comma = row.size();
            std::string token = row.substr(start, comma - start);
            try {
                std::size_t used = 0;
                double value = std::stod(token, &used);
                while (used < token.size() && (token[used] == ' ' || token[used] == '\t')) ++used;
                if (used != token.size()) throw std::invalid_argument(token);
                if (!std::isfinite(value))
                    throw input_error(errc::parse_error, "line " + std::to_string(scan.line_no) +
                                                             ": non-finite coordinate");
                coords.push_back(value);
            } catch (const input_error&) {
                throw;
            } catch (const std::exception&) {
                numeric = false;
                break;
            }
            start = comma + 1;
        }
        if (!numeric) {
            if (first) {  // header row
                first = false;
                continue;
            }
            throw input_error(errc::parse_error,
                              "line " + std::to_string(scan.line_no) + ": expected numbers");
        }
        first = false;
        if (!cloud.points.empty() && coords.size() != cloud.points.front().size())
            throw input_error(errc::parse_error, "line " + std::to_string(scan.line_no) +
                                                     ": inconsistent point dimension");
        cloud.points.push_back(std::move(coords));
    }
    if (cloud.points.empty())
        throw input_error(errc::parse_error, "point cloud is empty");
    return cloud;
}

namespace {

double point_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double sq = 0;
    for (std::size_t i = 0; i < a.size(); ++i) sq += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(sq);
}

struct rips_cell {
    double diameter;
    std::vector<vertex_t> verts;
};

void grow_cliques(const std::vector<std::vector<double>>& dist, const rips_cell& cell,
                  double threshold, int max_dim, std::vector<rips_cell>& out) {
    if (static_cast<int>(cell.verts.size()) > max_dim) return;
    const int n = static_cast<int>(dist.size());
    for (vertex_t v = cell.verts.back() + 1; v < n; ++v) {
        double diameter = cell.diameter;
        bool ok = true;
        for (vertex_t u : cell.verts) {
            double d = dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
            if (d > threshold) {
                ok = false;
                break;
            }
            diameter = std::max(diameter, d);
        }
        if (!ok) continue;
        rips_cell next{diameter, cell.verts};
        next.verts.push_back(v);
        out.push_back(next);
        grow_cliques(dist, next, threshold, max_dim, out);
    }
}

}  // namespace

filtered_complex rips_filtration(const point_cloud& cloud, const rips_config& cfg) {
    if (cloud.points.empty())
        throw input_error(errc::parse_error, "point cloud is empty");
    if (cfg.threshold < 0 || cfg.max_dim < 0)
        throw input_error(errc::query_out_of_range, "threshold and max-dim must be nonnegative");
    const std::size_t n = cloud.points.size();
    std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            dist[i][j] = dist[j][i] = point_distance(cloud.points[i], cloud.points[j]);

    std::vector<rips_cell> cells;
    for (std::size_t v = 0; v < n; ++v) {
        rips_cell vertex{0.0, {static_cast<vertex_t>(v)}};
        cells.push_back(vertex);
        grow_cliques(dist, vertex, cfg.threshold, cfg.max_dim, cells);
    }
    std::sort(cells.begin(), cells.end(), [](const rips_cell& a, const rips_cell& b) {
        if (a.diameter != b.diameter) return a.diameter < b.diameter;
        if (a.verts.size() != b.verts.size()) return a.verts.size() < b.verts.size();
        return a.verts < b.verts;
    });
    std::vector<simplex> simplices;
    simplices.reserve(cells.size());
    for (rips_cell& c : cells) simplices.push_back(simplex(std::move(c.verts)));
    return filtered_complex::build(std::move(simplices));
}

std::string emit_complex(const filtered_complex& x) {
    std::ostringstream os;
    for (const simplex& s : x.simplices()) {
        for (std::size_t i = 0; i < s.cardinality(); ++i) {
            if (i) os << ' ';
            os << s[i];
        }
        os << '\n';
    }
    return os.str();
}

std::string emit_cochain(const cochain& a) {
    std::ostringstream os;
    for (const simplex& s : a.support()) {
        for (std::size_t i = 0; i < s.cardinality(); ++i) {
            if (i) os << ' ';
            os << s[i];
        }
        os << '\n';
    }
    return os.str();
}

namespace {

ordered_json interval_left_json(const extended_interval& iv) {
    if (iv.left == minus_infinity) return "-inf";
    return iv.left;
}

}  // namespace

std::string barcode_json(const barcode& bc) {
    ordered_json bars = ordered_json::array();
    for (const bar& b : bc.bars()) {
        ordered_json item;
        item["degree"] = b.degree;
        item["left"] = interval_left_json(b.interval);
        item["right"] = b.interval.right;
        item["count"] = b.count;
        bars.push_back(std::move(item));
    }
    return bars.dump(2) + "\n";
}

std::string cochain_json(const cochain& a) {
    ordered_json out;
    out["degree"] = a.degree();
    ordered_json support = ordered_json::array();
    for (const simplex& s : a.support()) {
        ordered_json verts = ordered_json::array();
        for (vertex_t v : s.vertices()) verts.push_back(v);
        support.push_back(std::move(verts));
    }
    out["support"] = std::move(support);
    return out.dump(2) + "\n";
}

std::string rank_json(const rank_query& q, std::size_t rank_value) {
    ordered_json out;
    out["k"] = q.k;
    out["d"] = q.d;
    out["i"] = q.i == minus_infinity ? ordered_json("-inf") : ordered_json(q.i);
    out["j"] = q.j;
    out["rank"] = rank_value;
    return out.dump(2) + "\n";
}

std::string rank_table_csv(const rank_table& table) {
    std::ostringstream os;
    os << "i,j,rank\n";
    for (const rank_table_entry& e : table.entries) {
        if (e.i == minus_infinity)
            os << "-inf";
        else
            os << e.i;
        os << ',' << e.j << ',' << e.rank << '\n';
    }
    return os.str();
}

std::string rank_table_json(const rank_table& table) {
    ordered_json rows = ordered_json::array();
    for (const rank_table_entry& e : table.entries) {
        ordered_json row;
        row["i"] = e.i == minus_infinity ? ordered_json("-inf") : ordered_json(e.i);
        row["j"] = e.j;
        row["rank"] = e.rank;
        rows.push_back(std::move(row));
    }
    ordered_json out;
    out["k"] = table.k;
    out["d"] = table.d;
    out["entries"] = std::move(rows);
    return out.dump(2) + "\n";
}

std::string barcode_svg(const barcode& bc, index_t n) {
    // one row per interval copy, grouped by degree; layout depends only on the
    // barcode content
    struct row {
        int degree;
        extended_interval iv;
    };
    std::vector<row> rows;
    for (const bar& b : bc.bars())
        for (std::size_t c = 0; c < b.count; ++c) rows.push_back({b.degree, b.interval});

    const int bar_height = 8;
    const int bar_gap = 6;
    const int group_gap = 18;
    const int left_margin = 56;
    const int right_margin = 24;
    const int top_margin = 24;
    const double plot_width = 560;
    const double span = n > 1 ? static_cast<double>(n - 1) : 1.0;
    auto x_of = [&](index_t stage) {
        return left_margin + plot_width * (static_cast<double>(stage - 1) / span);
    };

    int height = top_margin;
    int last_degree = rows.empty() ? 0 : rows.front().degree;
    for (const row& r : rows) {
        if (r.degree != last_degree) {
            height += group_gap;
            last_degree = r.degree;
        }
        height += bar_height + bar_gap;
    }
    height += top_margin;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
       << static_cast<int>(left_margin + plot_width + right_margin) << "\" height=\"" << height
       << "\">\n";
    int y = top_margin;
    last_degree = rows.empty() ? 0 : rows.front().degree;
    bool first_in_group = true;
    for (const row& r : rows) {
        if (r.degree != last_degree) {
            y += group_gap;
            last_degree = r.degree;
            first_in_group = true;
        }
        if (first_in_group) {
            os << "  <text x=\"8\" y=\"" << y + bar_height << "\" font-size=\"12\">H" << r.degree
               << "</text>\n";
            first_in_group = false;
        }
        bool unbounded = r.iv.left == minus_infinity;
        double x0 = unbounded ? static_cast<double>(left_margin) : x_of(r.iv.left + 1);
        double x1 = x_of(r.iv.right);
        if (x1 < x0) x1 = x0;  // single-stage bar
        os << "  <rect x=\"" << x0 << "\" y=\"" << y << "\" width=\"" << (x1 - x0 < 1 ? 1 : x1 - x0)
           << "\" height=\"" << bar_height << "\" fill=\"#3465a4\"/>\n";
        if (unbounded) {
            // left-pointing arrowhead marking an interval unbounded below
            os << "  <path d=\"M" << x0 << ' ' << y << " L" << x0 - 10 << ' '
               << y + bar_height / 2 << " L" << x0 << ' ' << y + bar_height
               << " Z\" fill=\"#3465a4\"/>\n";
        }
        y += bar_height + bar_gap;
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace phsq
