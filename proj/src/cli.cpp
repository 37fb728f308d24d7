#include "phsq/cli.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "phsq/io.hpp"
#include "phsq/synthetic.hpp"

namespace phsq {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error(errc::parse_error, "cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error(errc::parse_error, "cannot write '" + path + "'");
    out << content;
}

index_t parse_stage_or_inf(std::string token) {
    if (!token.empty() && token.front() == '=') token.erase(0, 1);  // -i=-inf form
    if (token == "-inf") return minus_infinity;
    try {
        std::size_t used = 0;
        long long value = std::stoll(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return static_cast<index_t>(value);
    } catch (const std::exception&) {
        throw input_error(errc::parse_error, "expected a stage or -inf, got '" + token + "'");
    }
}

std::string interval_left_text(const extended_interval& iv) {
    return iv.left == minus_infinity ? "-inf" : std::to_string(iv.left);
}

int cmd_barcode(const std::string& path, bool as_json, const std::string& svg_out) {
    filtered_complex x = parse_complex_file(read_file(path));
    barcode bc = barcode_of(persistence_triples(x));
    if (!svg_out.empty()) {
        write_file(svg_out, barcode_svg(bc, x.size()));
        return 0;
    }
    if (as_json) {
        std::cout << barcode_json(bc);
        return 0;
    }
    for (const bar& b : bc.bars())
        std::cout << b.degree << ' ' << interval_left_text(b.interval) << ' ' << b.interval.right
                  << ' ' << b.count << '\n';
    return 0;
}

int cmd_stsq(const std::string& complex_path, const std::string& cochain_path, unsigned k,
             std::optional<int> degree, bool as_json) {
    filtered_complex x = parse_complex_file(read_file(complex_path));
    cochain s = parse_cochain_file(read_file(cochain_path), x, degree);
    cochain result = stsq(k, s, x);
    if (as_json)
        std::cout << cochain_json(result);
    else
        std::cout << emit_cochain(result);
    return 0;
}

int cmd_rankinv(const std::string& path, unsigned k, int d, const std::string& i_token,
                const std::string& j_token, bool table, bool as_json) {
    filtered_complex x = parse_complex_file(read_file(path));
    if (table) {
        rank_table t = rank_inv_table(x, k, d);
        std::cout << (as_json ? rank_table_json(t) : rank_table_csv(t));
        return 0;
    }
    if (i_token.empty() || j_token.empty())
        throw input_error(errc::query_out_of_range, "rankinv needs -i and -j, or --table");
    rank_query q{k, d, parse_stage_or_inf(i_token), parse_stage_or_inf(j_token)};
    std::size_t value = rank_inv(persistence_triples(x), x, q);
    if (as_json)
        std::cout << rank_json(q, value);
    else
        std::cout << value << '\n';
    return 0;
}

int cmd_rips(const std::string& points_path, double threshold, int max_dim,
             const std::string& out_path) {
    point_cloud cloud = parse_points_csv(read_file(points_path));
    filtered_complex x = rips_filtration(cloud, rips_config{threshold, max_dim});
    write_file(out_path, emit_complex(x));
    return 0;
}

// Small-scale consistency sweeps over a user complex; exits 2 on any mismatch.
int cmd_selfcheck(const std::string& path) {
    filtered_complex x = parse_complex_file(read_file(path));
    const index_t n = x.size();
    std::mt19937 rng(0xC0FFEE);

    {  // reduction invariants
        f2_matrix d_perp = build_antitransposed_coboundary(x);
        phcol_result rv = phcol(d_perp);
        if (!(multiply(d_perp, rv.v) == rv.r))
            throw internal_error(errc::inconsistent_input, "selfcheck: R != D-perp * V");
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (std::size_t j = 1; j <= static_cast<std::size_t>(n); ++j) {
            if (auto p = rv.r.col(j).pivot()) {
                if (seen[*p])
                    throw internal_error(errc::inconsistent_input, "selfcheck: repeated pivot");
                seen[*p] = true;
            }
        }
        std::cout << "ok reduction (R = D-perp V, pivots distinct)\n";
    }

    std::vector<graded_triple> z = persistence_triples(x);
    barcode bc = barcode_of(z);

    {  // barcode counts against the restriction-rank oracle
        index_t step = n <= 45 ? 1 : (n + 44) / 45;
        std::size_t checked = 0;
        for (int d = 0; d <= std::min(x.dimension(), 3); ++d)
            for (index_t i = 1; i <= n; i += step)
                for (index_t j = i; j <= n; j += step) {
                    if (bc.count_containing(d, i, j) != restriction_rank_oracle(x, d, i, j)) {
                        std::ostringstream os;
                        os << "selfcheck: barcode count differs from restriction rank at d=" << d
                           << " i=" << i << " j=" << j;
                        throw internal_error(errc::inconsistent_input, os.str());
                    }
                    ++checked;
                }
        std::cout << "ok barcode (" << checked << " windows against the rank oracle)\n";
    }

    {  // stsq against the coefficient-sum oracle
        std::size_t checked = 0;
        for (int d = 0; d <= std::min(x.dimension(), 2); ++d)
            for (int trial = 0; trial < 12; ++trial) {
                cochain s = random_cochain(rng, x, d);
                for (unsigned k = 1; k <= static_cast<unsigned>(d) + 1; ++k) {
                    if (!(stsq(k, s, x) == cup_square_oracle(k, s, x)))
                        throw internal_error(errc::inconsistent_input,
                                             "selfcheck: stsq differs from the cup-square oracle");
                    ++checked;
                }
            }
        std::cout << "ok stsq (" << checked << " random cochains against the oracle)\n";
    }

    {  // rank invariant against the direct oracle
        index_t step = n <= 12 ? 1 : (n + 11) / 12;
        std::size_t checked = 0;
        for (unsigned k = 1; k <= 2; ++k)
            for (int d = 0; d <= std::min(x.dimension(), 2); ++d)
                for (index_t i = 1; i <= n; i += step)
                    for (index_t j = i; j <= n; j += step) {
                        rank_query q{k, d, i, j};
                        if (rank_inv(z, x, q) != rank_inv_oracle(x, q)) {
                            std::ostringstream os;
                            os << "selfcheck: rank invariant differs from the oracle at k=" << k
                               << " d=" << d << " i=" << i << " j=" << j;
                            throw internal_error(errc::inconsistent_input, os.str());
                        }
                        ++checked;
                    }
        std::cout << "ok rankinv (" << checked << " windows against the oracle)\n";
    }

    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"persistent cohomology barcodes and Steenrod-square rank invariants over F2"};
    app.require_subcommand(1);

    auto* barcode_cmd = app.add_subcommand("barcode", "compute the barcode of a filtration");
    std::string barcode_path;
    bool barcode_json_flag = false;
    std::string barcode_svg_path;
    barcode_cmd->add_option("complex", barcode_path, "filtration file")->required();
    auto* bj = barcode_cmd->add_flag("--json", barcode_json_flag, "emit JSON");
    barcode_cmd->add_option("--svg", barcode_svg_path, "write an SVG plot to this path")
        ->excludes(bj);

    auto* stsq_cmd = app.add_subcommand("stsq", "Steenrod square of a cochain");
    std::string stsq_complex, stsq_cochain;
    unsigned stsq_k = 1;
    bool stsq_json_flag = false;
    std::optional<int> stsq_degree;
    stsq_cmd->add_option("complex", stsq_complex, "filtration file")->required();
    stsq_cmd->add_option("cochain", stsq_cochain, "cochain file")->required();
    stsq_cmd->add_option("-k", stsq_k, "which square")->required();
    stsq_cmd->add_option("--degree", stsq_degree, "degree of an empty cochain file");
    stsq_cmd->add_flag("--json", stsq_json_flag, "emit JSON");

    auto* rank_cmd = app.add_subcommand("rankinv", "Steenrod rank invariant");
    std::string rank_path, rank_i, rank_j;
    unsigned rank_k = 1;
    int rank_d = 0;
    bool rank_table_flag = false, rank_json_flag = false;
    rank_cmd->add_option("complex", rank_path, "filtration file")->required();
    rank_cmd->add_option("-k", rank_k, "which square")->required();
    rank_cmd->add_option("-d", rank_d, "cohomology degree")->required();
    auto* oi = rank_cmd->add_option("-i", rank_i, "window start stage, or -inf");
    auto* oj = rank_cmd->add_option("-j", rank_j, "window end stage");
    rank_cmd->add_flag("--table", rank_table_flag, "full (i, j) sweep as CSV")
        ->excludes(oi)
        ->excludes(oj);
    rank_cmd->add_flag("--json", rank_json_flag, "emit JSON");

    auto* rips_cmd = app.add_subcommand("rips", "Vietoris-Rips filtration of a point cloud");
    std::string rips_points, rips_out;
    double rips_threshold = 0;
    int rips_max_dim = 1;
    rips_cmd->add_option("points", rips_points, "CSV point file")->required();
    rips_cmd->add_option("--threshold", rips_threshold, "maximum edge diameter")->required();
    rips_cmd->add_option("--max-dim", rips_max_dim, "maximum simplex dimension")->required();
    rips_cmd->add_option("--out", rips_out, "output filtration file")->required();

    auto* check_cmd = app.add_subcommand("selfcheck", "run the oracle-agreement suites");
    std::string check_path;
    check_cmd->add_option("complex", check_path, "filtration file")->required();

    try {
        app.parse(argc, argv);
        if (barcode_cmd->parsed())
            return cmd_barcode(barcode_path, barcode_json_flag, barcode_svg_path);
        if (stsq_cmd->parsed())
            return cmd_stsq(stsq_complex, stsq_cochain, stsq_k, stsq_degree, stsq_json_flag);
        if (rank_cmd->parsed())
            return cmd_rankinv(rank_path, rank_k, rank_d, rank_i, rank_j, rank_table_flag,
                               rank_json_flag);
        if (rips_cmd->parsed())
            return cmd_rips(rips_points, rips_threshold, rips_max_dim, rips_out);
        if (check_cmd->parsed()) return cmd_selfcheck(check_path);
        return 1;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const input_error& e) {
        std::cerr << "error[" << errc_name(e.code()) << "]: " << e.what() << '\n';
        return 1;
    } catch (const internal_error& e) {
        std::cerr << "error[" << errc_name(e.code()) << "]: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error[unexpected]: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace phsq
