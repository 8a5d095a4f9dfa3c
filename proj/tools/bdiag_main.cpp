#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bdiag/diagram.hpp"
#include "bdiag/enumeration.hpp"
#include "bdiag/fusion.hpp"
#include "bdiag/heisenberg.hpp"
#include "bdiag/hopf.hpp"
#include "bdiag/partitions.hpp"
#include "bdiag/selftest.hpp"

namespace {

bdiag::BDiagram load_diagram(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw bdiag::ValidationError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return bdiag::diagram_from_json_string(buf.str());
}

void run_enumerate(int weight, bool by_hfup, const std::string& emit_path) {
    std::ofstream file;
    std::ostream* emit = nullptr;
    if (!emit_path.empty()) {
        if (emit_path == "-") {
            emit = &std::cout;
        } else {
            file.open(emit_path);
            if (!file) throw bdiag::ValidationError("cannot open " + emit_path);
            emit = &file;
        }
    }
    std::vector<bdiag::Int> hist(static_cast<std::size_t>(weight) + 1, 0);
    bdiag::enumerate_all(weight, [&](const bdiag::BDiagram& g) {
        ++hist[bdiag::free_up(g).size()];
        if (emit) *emit << bdiag::to_json_string(g) << '\n';
    });
    bdiag::Int total = 0;
    for (const auto& v : hist) total += v;
    std::cout << total.str() << '\n';
    if (by_hfup) {
        for (std::size_t q = 0; q < hist.size(); ++q)
            std::cout << q << ' ' << hist[q].str() << '\n';
    } else {
        for (std::size_t q = 0; q < hist.size(); ++q)
            std::cout << (q ? " " : "") << hist[q].str();
        std::cout << '\n';
    }
}

void run_normal_order(const std::string& text, const std::string& route) {
    bdiag::OperatorExpr e = bdiag::parse_expr(text);
    if (route == "all") {
        std::cout << "route rewrite\n" << bdiag::render(normal_order(e, bdiag::Route::rewrite))
                  << "route diagram\n" << bdiag::render(normal_order(e, bdiag::Route::diagram))
                  << "route monomial\n"
                  << bdiag::render(normal_order(e, bdiag::Route::monomial));
        return;
    }
    bdiag::Route r = route == "rewrite"   ? bdiag::Route::rewrite
                     : route == "diagram" ? bdiag::Route::diagram
                                          : bdiag::Route::monomial;
    std::cout << bdiag::render(normal_order(e, r));
}

void run_stirling(const std::vector<int>& r, const std::vector<int>& s) {
    bdiag::StirlingRow row = bdiag::stirling(r, s);
    std::cout << "alpha=" << row.alpha << ";";
    for (const auto& [k, v] : row.s) std::cout << " S(" << k << ")=" << v.str();
    std::cout << '\n';
}

void run_wsym_mul(const std::string& left, const std::string& right) {
    bdiag::SetPartition p1 = bdiag::parse_set_partition(left);
    bdiag::SetPartition p2 = bdiag::parse_set_partition(right);
    std::cout << "oracle:\n";
    std::map<bdiag::SetPartition, bdiag::Rat> oracle = bdiag::wsym_product_oracle(p1, p2);
    for (const auto& [p, c] : oracle)
        std::cout << bdiag::to_string(c) << ' ' << bdiag::render(p) << '\n';
    std::cout << "diagram:\n";
    std::map<bdiag::SetPartition, bdiag::Rat> via;
    bdiag::DiagramSum prod = star(bdiag::DiagramSum(b_of(p1)), bdiag::DiagramSum(b_of(p2)));
    for (const auto& [d, c] : prod.terms()) via[bdiag::partition_of(d)] += c;
    for (const auto& [p, c] : via)
        std::cout << bdiag::to_string(c) << ' ' << bdiag::render(p) << '\n';
}

void run_bwsym_mul(const std::string& left, const std::string& right) {
    bdiag::ListPartition p1 = bdiag::parse_list_partition(left);
    bdiag::ListPartition p2 = bdiag::parse_list_partition(right);
    std::cout << "oracle:\n";
    std::map<bdiag::ListPartition, bdiag::Rat> oracle = bdiag::bwsym_product_oracle(p1, p2);
    for (const auto& [p, c] : oracle)
        std::cout << bdiag::to_string(c) << ' ' << bdiag::render(p) << '\n';
    std::cout << "diagram:\n";
    std::map<bdiag::ListPartition, bdiag::Rat> via;
    bdiag::DiagramSum prod = star(bdiag::DiagramSum(m_of(p1)), bdiag::DiagramSum(m_of(p2)));
    for (const auto& [d, c] : prod.terms()) via[bdiag::lists_of(d)] += c;
    for (const auto& [p, c] : via)
        std::cout << bdiag::to_string(c) << ' ' << bdiag::render(p) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hopf algebra of B-diagrams: enumeration, products, coproducts, "
                 "normal ordering and partition bases"};
    app.require_subcommand(1);

    int weight = 0;
    bool by_hfup = false;
    std::string emit_path;
    auto* enum_cmd = app.add_subcommand("enumerate", "Count all diagrams of one weight");
    enum_cmd->add_option("--weight", weight, "total number of slots")
        ->required()
        ->check(CLI::Range(0, 8));
    enum_cmd->add_flag("--by-hfup", by_hfup,
                       "print one 'q count' line per free outer side count");
    enum_cmd->add_option("--emit-diagrams", emit_path,
                         "write every diagram as JSON, one per line ('-' for stdout)");

    std::string bottom_path, top_path;
    auto* star_cmd = app.add_subcommand("star", "Product of two diagram JSON files");
    star_cmd->add_option("bottom", bottom_path, "JSON file of the lower factor")->required();
    star_cmd->add_option("top", top_path, "JSON file of the upper factor")->required();

    std::string co_path;
    auto* co_cmd = app.add_subcommand("coproduct", "Split a diagram along its components");
    co_cmd->add_option("file", co_path, "diagram JSON file")->required();

    std::string prim_path;
    auto* prim_cmd = app.add_subcommand("primitive", "Project a diagram onto primitives");
    prim_cmd->add_option("file", prim_path, "diagram JSON file")->required();

    std::string expr_text, route_name = "monomial";
    auto* no_cmd = app.add_subcommand("normal-order", "Normal order an operator expression");
    no_cmd->add_option("expr", expr_text, "word in a, a+, powers and parentheses")->required();
    no_cmd->add_option("--route", route_name, "rewrite, diagram, monomial or all")
        ->check(CLI::IsMember({"rewrite", "diagram", "monomial", "all"}));

    std::vector<int> r_vec, s_vec;
    auto* st_cmd = app.add_subcommand("stirling", "Coefficient row of an iterated factor word");
    st_cmd->add_option("--r", r_vec, "creator counts r_1,..,r_n")->required()->delimiter(',');
    st_cmd->add_option("--s", s_vec, "annihilator counts s_1,..,s_n")->required()->delimiter(',');

    std::string wsym_left, wsym_right;
    auto* wsym_cmd = app.add_subcommand("wsym", "Set partition basis");
    wsym_cmd->require_subcommand(1);
    auto* wsym_mul = wsym_cmd->add_subcommand("mul", "Product of two set partitions");
    wsym_mul->add_option("left", wsym_left, "for example {1,3|2}")->required();
    wsym_mul->add_option("right", wsym_right, "for example {1|2}")->required();

    std::string bwsym_left, bwsym_right;
    auto* bwsym_cmd = app.add_subcommand("bwsym", "Set partition into lists basis");
    bwsym_cmd->require_subcommand(1);
    auto* bwsym_mul = bwsym_cmd->add_subcommand("mul", "Product of two list partitions");
    bwsym_mul->add_option("left", bwsym_left, "for example {[3,1]|[2]}")->required();
    bwsym_mul->add_option("right", bwsym_right, "for example {[1,2]}")->required();

    std::string level_name = "full";
    auto* self_cmd = app.add_subcommand("selftest", "Run the validation suite");
    self_cmd->add_option("--level", level_name, "quick, full or deep")
        ->check(CLI::IsMember({"quick", "full", "deep"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*enum_cmd) {
            run_enumerate(weight, by_hfup, emit_path);
        } else if (*star_cmd) {
            bdiag::DiagramSum prod = star(bdiag::DiagramSum(load_diagram(bottom_path)),
                                          bdiag::DiagramSum(load_diagram(top_path)));
            std::cout << bdiag::render(prod);
        } else if (*co_cmd) {
            std::cout << bdiag::render(bdiag::coproduct(load_diagram(co_path)));
        } else if (*prim_cmd) {
            std::cout << bdiag::render(bdiag::eulerian(load_diagram(prim_path)));
        } else if (*no_cmd) {
            run_normal_order(expr_text, route_name);
        } else if (*st_cmd) {
            run_stirling(r_vec, s_vec);
        } else if (*wsym_mul) {
            run_wsym_mul(wsym_left, wsym_right);
        } else if (*bwsym_mul) {
            run_bwsym_mul(bwsym_left, bwsym_right);
        } else if (*self_cmd) {
            bdiag::CheckLevel level = level_name == "quick"  ? bdiag::CheckLevel::quick
                                      : level_name == "deep" ? bdiag::CheckLevel::deep
                                                             : bdiag::CheckLevel::full;
            if (!bdiag::report(bdiag::run_selftests(level), std::cout)) return 1;
        }
    } catch (const bdiag::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
