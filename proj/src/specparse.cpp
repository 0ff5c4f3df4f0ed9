#include "ge2/specparse.hpp"

#include "json.hpp"

#include <sstream>

namespace ge2 {

namespace {

using nlohmann::json;

Int parse_int(std::string const &s)
{
    try {
        if (s.empty())
            throw std::invalid_argument("empty");
        return Int(s);
    } catch (std::exception const &) {
        throw parse_error("bad integer literal '" + s + "'");
    }
}

void require_squarefree(Int const &d)
{
    if (d <= 0)
        throw parse_error("d must be positive");
    for (Int p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0)
            throw parse_error("d must be squarefree");
}

std::string trimmed(std::string s)
{
    size_t a = s.find_first_not_of(" \t");
    size_t b = s.find_last_not_of(" \t");
    if (a == std::string::npos)
        return "";
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(std::string const &s, char sep)
{
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, sep))
        out.push_back(trimmed(tok));
    return out;
}

IVec parse_coords(Order const &o, std::string const &s)
{
    IVec v;
    for (auto const &tok : split(s, ','))
        v.push_back(parse_int(tok));
    if (static_cast<int>(v.size()) != o.rank())
        throw parse_error("expected " + std::to_string(o.rank()) +
                          " coordinates in '" + s + "'");
    return v;
}

json parse_json(std::string const &s, std::string const &what)
{
    json j = json::parse(s, nullptr, false);
    if (j.is_discarded())
        throw parse_error("malformed JSON in " + what);
    return j;
}

} // namespace

AlgebraRef parse_algebra_descriptor(std::string const &s)
{
    if (s == "Q")
        return alg_rational();
    if (s.rfind("Qi:", 0) == 0) {
        Int d = parse_int(s.substr(3));
        require_squarefree(d);
        return alg_imquadratic(d);
    }
    if (s.rfind("quat:", 0) == 0) {
        auto parts = split(s.substr(5), ',');
        if (parts.size() != 2)
            throw parse_error("quaternion descriptor needs 'quat:<u>,<v>'");
        Int u = parse_int(parts[0]), v = parse_int(parts[1]);
        if (u >= 0 || v >= 0)
            throw parse_error("quaternion parameters must be negative");
        return alg_quaternion(u, v);
    }
    throw parse_error("unknown algebra descriptor '" + s + "'");
}

Order parse_order_spec(std::string const &s)
{
    if (s.rfind("Iq:", 0) == 0) {
        Int d = parse_int(s.substr(3));
        require_squarefree(d);
        for (auto known : {1, 2, 3, 7, 11})
            if (d == known)
                return builtin_order("I" + std::to_string(known));
        auto a = alg_imquadratic(d);
        Elem one = elem_one(a), sq = elem(a, {0, 1});
        Elem second = d % 4 == 3 ? Rat(1, 2) * (one + sq) : sq;
        return order_from_basis(a, {one, second}, s);
    }
    if (s.rfind("custom:", 0) == 0) {
        json j = parse_json(s.substr(7), "custom order spec");
        if (!j.is_object() || !j.contains("descriptor") ||
            !j.contains("basis"))
            throw parse_error("custom order needs descriptor and basis");
        auto a = parse_algebra_descriptor(j["descriptor"].get<std::string>());
        std::vector<Elem> basis;
        for (auto const &row : j["basis"]) {
            std::vector<Rat> c;
            for (auto const &x : row)
                c.push_back(x.is_string()
                                ? rat_parse(x.get<std::string>())
                                : Rat(x.get<long long>()));
            if (static_cast<int>(c.size()) != a->dim)
                throw parse_error("basis row has wrong length");
            basis.push_back(elem(a, c));
        }
        return order_from_basis(a, basis, "custom");
    }
    return builtin_order(s);
}

FiniteGroup parse_group_spec(std::string const &s)
{
    if (s.rfind("perm:", 0) == 0) {
        json j = parse_json(s.substr(5), "permutation generators");
        std::vector<std::vector<int>> gens;
        for (auto const &p : j)
            gens.push_back(p.get<std::vector<int>>());
        if (gens.empty())
            throw parse_error("no permutation generators given");
        return group_from_perms("perm-group", gens);
    }
    if (s.rfind("table:", 0) == 0) {
        json j = parse_json(s.substr(6), "multiplication table");
        std::vector<std::vector<int>> tab;
        for (auto const &row : j)
            tab.push_back(row.get<std::vector<int>>());
        return group_from_table("table-group", tab);
    }
    return builtin_group(s);
}

Word parse_word(Order const &o, std::string const &s)
{
    Word w;
    for (auto tok : split(s, ';')) {
        if (tok.empty())
            continue;
        bool inverse = false;
        if (tok.rfind("inv(", 0) == 0 && tok.back() == ')') {
            inverse = true;
            tok = trimmed(tok.substr(4, tok.size() - 5));
        }
        if (tok.size() >= 3 && tok[0] == 'E' && tok[1] == '(' &&
            tok.back() == ')') {
            w.push_back(letter_E(
                parse_coords(o, tok.substr(2, tok.size() - 3)), inverse));
        } else if (tok.size() >= 3 && tok[0] == 'D' && tok[1] == '(' &&
                   tok.back() == ')') {
            w.push_back(letter_D(
                o, parse_coords(o, tok.substr(2, tok.size() - 3)), inverse));
        } else if (tok.size() >= 2 && tok.front() == '[' &&
                   tok.back() == ']') {
            auto body = tok.substr(1, tok.size() - 2);
            auto lp = body.find('('), rp = body.find(')');
            auto lp2 = body.find('(', rp == std::string::npos ? 0 : rp);
            auto rp2 = body.rfind(')');
            if (lp == std::string::npos || rp == std::string::npos ||
                lp2 == std::string::npos || rp2 == std::string::npos ||
                rp2 <= lp2)
                throw parse_error("diagonal letter needs '[(...),(...)]'");
            IVec mu = parse_coords(o, body.substr(lp + 1, rp - lp - 1));
            IVec nu = parse_coords(o, body.substr(lp2 + 1, rp2 - lp2 - 1));
            if (o.norm(mu) != 1 || o.norm(nu) != 1)
                throw domain_error("diagonal entries must be units");
            w.push_back(letter_diag(mu, nu, inverse));
        } else {
            throw parse_error("unrecognized letter '" + tok + "'");
        }
    }
    return w;
}

std::string word_str(Word const &w)
{
    auto coords = [](IVec const &v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) {
            if (i)
                s += ",";
            s += v[i].str();
        }
        return s;
    };
    std::string out;
    for (auto const &l : w) {
        if (!out.empty())
            out += ";";
        std::string core;
        if (l.kind == Letter::Kind::E)
            core = "E(" + coords(l.x) + ")";
        else
            core = "[(" + coords(l.mu) + "),(" + coords(l.nu) + ")]";
        out += l.inverse ? "inv(" + core + ")" : core;
    }
    return out;
}

} // namespace ge2
