#include "k3lattice/cycles.hpp"
#include "k3lattice/kummer.hpp"
#include "k3lattice/lattice.hpp"
#include "k3lattice/matrix_io.hpp"
#include "k3lattice/report_json.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace k3lattice;

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

IntegerMatrix named_form(const std::string& name) {
    if (name == "e8") return e8_minus().gram();
    if (name == "h") return hyperbolic_h().gram();
    if (name == "k3")
        return direct_sum({e8_minus(), e8_minus(), hyperbolic_h(), hyperbolic_h(), hyperbolic_h()})
            .gram();
    throw std::invalid_argument("unknown form name: " + name);
}

std::string coords_text(const std::array<int, 4>& c) {
    std::string out = "(";
    for (std::size_t i = 0; i < 4; ++i) {
        if (i) out += ",";
        out += std::to_string(c[i]);
    }
    return out + ")";
}

std::string direction_text(const std::array<long long, 4>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < 4; ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for the K3 intersection lattice"};
    app.require_subcommand(1);
    int rc = 0;

    // forms <e8|h|k3>
    std::string forms_name;
    bool forms_json = false;
    auto* forms = app.add_subcommand("forms", "print a named Gram matrix");
    forms->add_option("name", forms_name, "one of: e8, h, k3")
        ->required()
        ->check(CLI::IsMember({"e8", "h", "k3"}));
    forms->add_flag("--json", forms_json, "emit JSON instead of matrix text");
    forms->callback([&] {
        const IntegerMatrix g = named_form(forms_name);
        if (forms_json)
            print_json(matrix_to_json(g));
        else
            std::cout << to_text(g);
    });

    // snf <path>
    std::string snf_path;
    bool snf_json = false;
    auto* snf = app.add_subcommand("snf", "Smith normal form of a matrix text file");
    snf->add_option("path", snf_path, "matrix text file")->required();
    snf->add_flag("--json", snf_json, "emit diagonal plus the U, V transforms as JSON");
    snf->callback([&] {
        const IntegerMatrix m = parse_integer_matrix(read_file(snf_path));
        const SnfResult result = smith_normal_form(m);
        const std::size_t n = std::min(result.d.rows(), result.d.cols());
        if (snf_json) {
            nlohmann::json diag = nlohmann::json::array();
            for (std::size_t i = 0; i < n; ++i) diag.push_back(format_integer(result.d(i, i)));
            print_json({{"diagonal", diag},
                        {"u", matrix_to_json(result.u)},
                        {"v", matrix_to_json(result.v)}});
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                if (i) std::cout << ' ';
                std::cout << format_integer(result.d(i, i));
            }
            std::cout << '\n';
        }
    });

    // classify --rank r --signature tau
    std::int64_t cl_rank = 0;
    std::int64_t cl_tau = 0;
    bool cl_json = false;
    auto* classify =
        app.add_subcommand("classify", "even indefinite unimodular form by rank and signature");
    classify->add_option("--rank", cl_rank, "lattice rank")->required();
    classify->add_option("--signature", cl_tau, "signature tau = n+ - n-")->required();
    classify->add_flag("--json", cl_json, "emit JSON");
    classify->callback([&] {
        const MilnorDecomposition d = milnor_decomposition(cl_rank, cl_tau);
        if (cl_json) {
            print_json({{"e8_minus_copies", d.e8_minus_copies},
                        {"h_copies", d.h_copies},
                        {"sign_flipped", d.sign_flipped}});
        } else {
            std::cout << d.e8_minus_copies << "E8(-1) + " << d.h_copies << "H\n";
            if (d.sign_flipped)
                std::cout << "note: positive signature, decomposition describes the negated form\n";
        }
    });

    // k3 verify
    auto* k3 = app.add_subcommand("k3", "whole-lattice verification");
    k3->require_subcommand(1);
    bool verify_json = false;
    auto* verify = k3->add_subcommand("verify", "rebuild and check the canonical basis");
    verify->add_flag("--json", verify_json, "emit the report as JSON");
    verify->callback([&] {
        const VerificationReport report = verify_canonical();
        if (verify_json)
            print_json(report_to_json(report));
        else
            std::cout << report_to_text(report);
        rc = (report.matches_canonical && report.pairings_integral) ? 0 : 1;
    });

    // kummer fixed-points | kummer torus --through a,b,c,d
    auto* kummer = app.add_subcommand("kummer", "fixed-point combinatorics of the involution");
    kummer->require_subcommand(1);

    bool fp_json = false;
    auto* fp = kummer->add_subcommand("fixed-points", "list the 16 fixed points");
    fp->add_flag("--json", fp_json, "emit JSON");
    fp->callback([&] {
        if (fp_json) {
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& p : fixed_points())
                rows.push_back({{"label", p.label}, {"coords", p.coords}});
            print_json(rows);
        } else {
            for (const auto& p : fixed_points())
                std::cout << "L" << p.label << " " << coords_text(p.coords) << "\n";
        }
    });

    std::vector<int> torus_labels;
    bool torus_json = false;
    auto* torus = kummer->add_subcommand("torus", "torus through four fixed points");
    torus->add_option("--through", torus_labels, "four fixed-point labels, e.g. 1,3,5,7")
        ->required()
        ->delimiter(',');
    torus->add_flag("--json", torus_json, "emit JSON");
    torus->callback([&] {
        if (torus_labels.size() != 4)
            throw std::invalid_argument("torus: need exactly four labels");
        std::array<int, 4> labels{};
        std::copy(torus_labels.begin(), torus_labels.end(), labels.begin());
        const auto dirs = are_coplanar(labels);
        if (!dirs) {
            if (torus_json)
                print_json({{"coplanar", false}});
            else
                std::cout << "not coplanar\n";
            rc = 1;
            return;
        }
        const CycleClass cls = torus_class_from_directions(*dirs);
        if (torus_json) {
            print_json({{"coplanar", true},
                        {"u", dirs->u},
                        {"v", dirs->v},
                        {"class", cls.to_string()}});
        } else {
            std::cout << "coplanar\n";
            std::cout << "directions: " << direction_text(dirs->u) << " "
                      << direction_text(dirs->v) << "\n";
            std::cout << "class: " << cls.to_string() << "\n";
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const classification_error& e) {
        std::cerr << "classification inapplicable: " << e.what() << "\n";
        return 3;
    } catch (const matrix_parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
