#include "CLI11.hpp"
#include "json.hpp"

#include "ge2/decide.hpp"
#include "ge2/specparse.hpp"

#include <iostream>

using nlohmann::json;
using namespace ge2;

namespace {

json json_int(Int const &v)
{
    if (v >= std::numeric_limits<long long>::min() &&
        v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

json json_coords(IVec const &v)
{
    json a = json::array();
    for (auto const &x : v)
        a.push_back(json_int(x));
    return a;
}

json json_invariants(AbInvariants const &inv)
{
    json a = json::array();
    for (auto const &d : inv.torsion)
        a.push_back(json_int(d));
    return a;
}

void emit(json const &out, bool as_json)
{
    if (as_json) {
        std::cout << out.dump() << "\n";
        return;
    }
    for (auto const &[k, v] : out.items())
        std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                  << "\n";
}

json hfa_json(HfaReport const &rep)
{
    return {{"hfa", rep.hfa},      {"fab", rep.hfa},
            {"T", rep.hfa},        {"hfr", rep.hfa},
            {"cut", rep.cut},      {"forbidden_witness", rep.forbidden_witness},
            {"certificate", rep.certificate}, {"fa", "open"}};
}

Mat2 parse_matrix(Order const &o, std::string const &text)
{
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_array() || j.size() != 2 ||
        j[0].size() != 2 || j[1].size() != 2)
        throw parse_error("matrix must be a JSON 2x2 array of coordinate "
                          "arrays");
    auto entry = [&](json const &e) {
        IVec v;
        for (auto const &x : e)
            v.push_back(x.is_string() ? Int(x.get<std::string>())
                                      : Int(x.get<long long>()));
        if (static_cast<int>(v.size()) != o.rank())
            throw parse_error("matrix entry has wrong coordinate count");
        return v;
    };
    return Mat2{entry(j[0][0]), entry(j[0][1]), entry(j[1][0]),
                entry(j[1][1])};
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"exact invariants of E2/GE2 over orders with finite unit "
                 "group, and HFA decisions for integral group rings"};
    app.require_subcommand(1);

    std::string order_spec, group_spec, word_text, matrix_text, mode = "D2";
    int samples = 100;
    unsigned seed = 1;
    bool as_json = false, trace = false;
    std::string action;

    auto common = [&](CLI::App *cmd, bool needs_order, bool needs_group) {
        if (needs_order)
            cmd->add_option("--order", order_spec, "order spec")->required();
        if (needs_group)
            cmd->add_option("--group", group_spec, "group spec")->required();
        cmd->add_flag("--json", as_json, "JSON output");
        cmd->add_option("--samples", samples, "sample count");
        cmd->add_option("--seed", seed, "RNG seed");
        cmd->callback([&action, cmd] {
            action = cmd->get_parent()->get_name() + " " + cmd->get_name();
        });
    };

    auto *order_cmd = app.add_subcommand("order", "order-level reports");
    for (auto const &nm : {"info", "units", "inv", "span"})
        common(order_cmd->add_subcommand(nm), true, false);

    auto *ab_cmd = app.add_subcommand("ab", "abelianizations");
    for (auto const &nm : {"e2", "ge2", "rank"})
        common(ab_cmd->add_subcommand(nm), true, false);

    auto *rel_cmd = app.add_subcommand("rel", "relations");
    for (auto const &nm : {"verify", "alpha", "reduce"}) {
        auto *c = rel_cmd->add_subcommand(nm);
        common(c, true, false);
        if (std::string(nm) == "reduce") {
            c->add_option("--word", word_text, "word in letter syntax")
                ->required();
            c->add_flag("--trace", trace, "stream reduction steps");
        }
    }

    auto *mat_cmd = app.add_subcommand("mat", "matrices");
    {
        auto *c = mat_cmd->add_subcommand("decompose");
        common(c, true, false);
        c->add_option("--matrix", matrix_text, "2x2 matrix as JSON")
            ->required();
    }

    auto *dec_cmd = app.add_subcommand("decide", "FA decisions for orders");
    for (auto const &nm : {"e2-fa", "e2-hfa", "borel-fa", "grk"}) {
        auto *c = dec_cmd->add_subcommand(nm);
        common(c, true, false);
        if (std::string(nm) == "grk")
            c->add_option("--mode", mode, "D2 or DE2");
    }

    auto *grp_cmd = app.add_subcommand("group", "group ring decisions");
    for (auto const &nm : {"build", "cut", "hfa", "odd", "components"})
        common(grp_cmd->add_subcommand(nm), false, true);

    CLI11_PARSE(app, argc, argv);

    try {
        json out;
        if (action.rfind("order ", 0) == 0 || action.rfind("ab ", 0) == 0 ||
            action.rfind("rel ", 0) == 0 || action.rfind("mat ", 0) == 0 ||
            action.rfind("decide ", 0) == 0) {
            Order o = parse_order_spec(order_spec);
            if (action == "order info") {
                auto u = unit_group(o);
                out = {{"name", o.name},
                       {"rank", o.rank()},
                       {"algebra", o.A->str()},
                       {"unit_count", u.size()},
                       {"unit_structure", identify_group(u.group)}};
            } else if (action == "order units") {
                auto u = unit_group(o);
                json list = json::array();
                for (auto const &e : u.elems)
                    list.push_back(json_coords(e));
                out = {{"structure", identify_group(u.group)},
                       {"count", u.size()},
                       {"units", list}};
            } else if (action == "order inv") {
                out = {{"inv", inv_of_order(o)}};
            } else if (action == "order span") {
                out = {{"span", rational_span(o, short_vectors(o, 1))}};
            } else if (action == "ab e2") {
                auto inv = e2_abelianization(o);
                out = {{"invariants", json_invariants(inv)},
                       {"free_rank", inv.free_rank},
                       {"structure", inv.str()}};
            } else if (action == "ab ge2") {
                auto rep = ge2_abelianization(o);
                out = {{"o_mod_n", rep.o_mod_n.str()},
                       {"u_ab", rep.u_ab.str()},
                       {"total_order", json_int(rep.total_order)},
                       {"collapsed", rep.collapsed}};
            } else if (action == "ab rank") {
                auto rep = rank_and_finiteness(o);
                out = {{"rank", rep.rank},
                       {"inv", rep.inv},
                       {"free_rank", rep.free_rank},
                       {"finite", rep.finite},
                       {"known_order", rep.known_order},
                       {"unit_basis", rep.unit_basis},
                       {"unit_generated", rep.unit_generated}};
            } else if (action == "rel verify") {
                auto rep = verify_relation_suite(o, samples, seed);
                out = {{"checks", rep.checks}, {"ok", true},
                       {"samples", samples},  {"seed", seed}};
            } else if (action == "rel alpha") {
                auto rep = alpha_relations(o);
                out = {{"norm2", rep.norm2}, {"norm3", rep.norm3}};
            } else if (action == "rel reduce") {
                auto tr = reduce_relation(o, parse_word(o, word_text));
                if (trace)
                    for (auto const &s : tr.steps) {
                        json before = json::array(), after = json::array();
                        for (auto const &t : s.before)
                            before.push_back(json_coords(t));
                        for (auto const &t : s.after)
                            after.push_back(json_coords(t));
                        std::cout << json{{"rule", s.rule},
                                          {"before", before},
                                          {"after", after},
                                          {"m", json_int(s.m)},
                                          {"h", s.h}}
                                         .dump()
                                  << "\n";
                    }
                out = {{"descents", tr.descents},
                       {"final_length",
                        static_cast<int>(tr.final_ts.size())}};
            } else if (action == "mat decompose") {
                Word w = ge2_decompose(o, parse_matrix(o, matrix_text));
                out = {{"word", word_str(w)},
                       {"letters", static_cast<int>(w.size())}};
            } else if (action == "decide e2-fa") {
                out = {{"fa", decide_fa_e2(o)}};
            } else if (action == "decide e2-hfa") {
                out = {{"hfa", decide_hfa_e2(o)}};
            } else if (action == "decide borel-fa") {
                out = {{"fa", decide_fa_borel(o)}};
            } else if (action == "decide grk") {
                auto rep = grk_criterion(o, mode);
                if (rep.found) {
                    json poly = json::array();
                    for (auto const &c : rep.char_poly)
                        poly.push_back(json_int(c));
                    out = {{"mode", rep.mode},
                           {"found", true},
                           {"mu", json_coords(rep.mu)},
                           {"nu", json_coords(rep.nu)},
                           {"char_poly", poly}};
                } else {
                    out = {{"mode", rep.mode},
                           {"found", false},
                           {"witness", "none"}};
                }
            }
        } else {
            FiniteGroup g = parse_group_spec(group_spec);
            if (action == "group build") {
                out = {{"name", g.name},
                       {"order", g.n},
                       {"abelian", g.is_abelian()}};
            } else if (action == "group cut") {
                out = {{"cut", is_cut(g)}};
            } else if (action == "group hfa") {
                out = hfa_json(decide_hfa(g));
            } else if (action == "group odd") {
                out = hfa_json(decide_odd_order(g));
            } else if (action == "group components") {
                auto p = component_predicates(g);
                out = {{"has_M2Q", p.has_m2q},
                       {"has_M2H5", p.has_m2h5},
                       {"solvable", p.solvable}};
            }
        }
        emit(out, as_json);
        return 0;
    } catch (parse_error const &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (domain_error const &e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (invariant_error const &e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 3;
    }
}
