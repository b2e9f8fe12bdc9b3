#include "graycode/serialize.hpp"

#include <json.hpp>

#include <sstream>

#include "graycode/errors.hpp"

namespace graycode {

namespace {

using nlohmann::json;

Semantics semantics_of(Target t) { return t == Target::PermAll ? Semantics::OnValues : Semantics::OnIndices; }

std::string header(const Artifact& a) {
    std::string h = "graycode v1 kind=" + target_name(a.target) + " n=" + std::to_string(a.n);
    if (a.r) h += " r=" + std::to_string(*a.r);
    return h;
}

long long to_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) throw DomainError("");
        return v;
    } catch (const std::exception&) {
        throw DomainError("bad " + what + ": '" + s + "'");
    }
}

Transposition make_flip(long long i, long long j, const Artifact& a) {
    if (i < 1 || j < 1 || i > a.n || j > a.n || i == j) throw DomainError("transposition out of range for n=" + std::to_string(a.n));
    return Transposition::make(static_cast<int>(i), static_cast<int>(j), semantics_of(a.target));
}

Diagonal make_diag(const std::string& s, int n) {
    auto dash = s.find('-');
    if (dash == std::string::npos) throw DomainError("bad diagonal: '" + s + "'");
    long long a = to_int(s.substr(0, dash), "diagonal"), b = to_int(s.substr(dash + 1), "diagonal");
    if (a < 1 || b < 1 || a > n || b > n) throw DomainError("diagonal out of range: '" + s + "'");
    return Diagonal::make(static_cast<int>(a), static_cast<int>(b), n);
}

Permutation parse_perm(const std::vector<long long>& v, int n) {
    if (static_cast<int>(v.size()) != n) throw DomainError("start has the wrong length");
    Permutation p(v.begin(), v.end());
    if (!is_permutation(p)) throw DomainError("start is not a permutation");
    return p;
}

void check_order(const Artifact& a) {
    if (a.target == Target::Assoc ? a.n < 4 || a.n > 200 : a.n < 1 || a.n > 16)
        throw DomainError("order out of range: " + std::to_string(a.n));
}

Artifact parse_text(const std::string& s) {
    std::istringstream is(s);
    std::string line;
    if (!std::getline(is, line)) throw DomainError("empty input");
    Artifact a;
    {
        std::istringstream hs(line);
        std::string magic, ver, field;
        if (!(hs >> magic >> ver) || magic != "graycode" || ver != "v1") throw DomainError("missing 'graycode v1' header");
        bool have_kind = false, have_n = false;
        while (hs >> field) {
            auto eq = field.find('=');
            if (eq == std::string::npos) throw DomainError("bad header field '" + field + "'");
            std::string key = field.substr(0, eq), val = field.substr(eq + 1);
            if (key == "kind") {
                auto t = parse_target(val);
                if (!t) throw DomainError("unknown kind '" + val + "'");
                a.target = *t;
                have_kind = true;
            } else if (key == "n") {
                a.n = static_cast<int>(to_int(val, "n"));
                have_n = true;
            } else if (key == "r") {
                a.r = to_int(val, "r");
            } else {
                throw DomainError("unknown header field '" + key + "'");
            }
        }
        if (!have_kind || !have_n) throw DomainError("header needs kind and n");
    }
    check_order(a);
    bool assoc = a.target == Target::Assoc;
    bool have_start = false, closed = false;
    std::vector<Diagonal> flips;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (closed) throw DomainError("content after the closing line");
        if (line.rfind("start: ", 0) == 0) {
            if (have_start) throw DomainError("repeated start line");
            std::string body = line.substr(7);
            if (assoc) {
                a.assoc.start = Triangulation::parse(body);
                if (a.assoc.start.n() != a.n) throw DomainError("start triangulation has the wrong size");
            } else {
                std::istringstream ps(body);
                std::vector<long long> v;
                std::string tok;
                while (ps >> tok) v.push_back(to_int(tok, "entry"));
                a.perm.start = parse_perm(v, a.n);
            }
            have_start = true;
            continue;
        }
        if (!have_start) throw DomainError("flip before the start line");
        bool closing = line.rfind("closing: ", 0) == 0;
        std::istringstream ls(closing ? line.substr(9) : line);
        std::string tag, x, y, extra;
        ls >> tag;
        if (assoc) {
            if (tag != "f" || !(ls >> x) || (ls >> extra)) throw DomainError("bad flip line '" + line + "'");
            flips.push_back(make_diag(x, a.n));
        } else {
            if (tag != "t" || !(ls >> x >> y) || (ls >> extra)) throw DomainError("bad flip line '" + line + "'");
            Transposition t = make_flip(to_int(x, "index"), to_int(y, "index"), a);
            if (closing) a.closing = t;
            else a.perm.flips.push_back(t);
        }
        closed = closing;
    }
    if (!have_start) throw DomainError("missing start line");
    if (assoc) {
        if (!closed) throw DomainError("cycle without a closing line");
        a.assoc.n = a.n;
        a.assoc.r = static_cast<int>(a.r.value_or(0));
        a.assoc.flips = std::move(flips);
    } else {
        a.perm.n = a.n;
        a.perm.cyclic = closed;
    }
    return a;
}

Artifact parse_json(const std::string& s) {
    json j;
    try {
        j = json::parse(s);
    } catch (const json::exception& e) {
        throw DomainError(std::string("bad JSON: ") + e.what());
    }
    try {
        if (j.at("format").get<std::string>() != "graycode" || j.at("version").get<int>() != 1) throw DomainError("not a graycode v1 document");
        Artifact a;
        auto t = parse_target(j.at("kind").get<std::string>());
        if (!t) throw DomainError("unknown kind");
        a.target = *t;
        a.n = j.at("n").get<int>();
        if (j.contains("r")) a.r = j.at("r").get<long long>();
        check_order(a);
        if (a.target == Target::Assoc) {
            a.assoc.n = a.n;
            a.assoc.r = static_cast<int>(a.r.value_or(0));
            a.assoc.start = Triangulation::parse(j.at("start").get<std::string>());
            if (a.assoc.start.n() != a.n) throw DomainError("start triangulation has the wrong size");
            for (const auto& f : j.at("flips")) a.assoc.flips.push_back(make_diag(f.get<std::string>(), a.n));
            a.assoc.flips.push_back(make_diag(j.at("closing").get<std::string>(), a.n));
        } else {
            a.perm.n = a.n;
            a.perm.start = parse_perm(j.at("start").get<std::vector<long long>>(), a.n);
            for (const auto& f : j.at("flips")) {
                auto p = f.get<std::vector<long long>>();
                if (p.size() != 2) throw DomainError("flip must have two entries");
                a.perm.flips.push_back(make_flip(p[0], p[1], a));
            }
            if (j.contains("closing")) {
                auto p = j.at("closing").get<std::vector<long long>>();
                if (p.size() != 2) throw DomainError("closing must have two entries");
                a.closing = make_flip(p[0], p[1], a);
                a.perm.cyclic = true;
            }
        }
        return a;
    } catch (const json::exception& e) {
        throw DomainError(std::string("bad JSON field: ") + e.what());
    }
}

} // namespace

std::string target_name(Target t) {
    switch (t) {
    case Target::PermAll: return "perm-all";
    case Target::PermCadj: return "perm-cadj";
    case Target::PermAdjRainbow: return "perm-adj-rainbow";
    case Target::Assoc: return "assoc";
    }
    return "?";
}

std::optional<Target> parse_target(const std::string& s) {
    for (Target t : {Target::PermAll, Target::PermCadj, Target::PermAdjRainbow, Target::Assoc})
        if (target_name(t) == s) return t;
    return std::nullopt;
}

Artifact make_artifact(Target t, const TranspositionSequence& s, std::optional<long long> r) {
    if (t == Target::Assoc) throw DomainError("make_artifact: assoc needs a triangulation cycle");
    check_homogeneous(s);
    if (!s.flips.empty() && s.semantics() != semantics_of(t)) throw DomainError("make_artifact: wrong transposition semantics for " + target_name(t));
    Artifact a;
    a.target = t;
    a.n = s.n;
    a.r = r;
    a.perm = s;
    if (s.cyclic) {
        a.closing = s.closing();
        if (!a.closing) throw DomainError("make_artifact: cyclic code does not close with a transposition");
        a.closing->sem = semantics_of(t);
    }
    return a;
}

Artifact make_artifact(const AssocRainbowCycle& c) {
    if (c.flips.empty()) throw DomainError("make_artifact: empty cycle");
    Artifact a;
    a.target = Target::Assoc;
    a.n = c.n;
    a.r = c.r;
    a.assoc = c;
    return a;
}

std::string to_text(const Artifact& a) {
    std::ostringstream os;
    os << header(a) << '\n';
    if (a.target == Target::Assoc) {
        os << "start: " << a.assoc.start.serialize() << '\n';
        for (std::size_t i = 0; i + 1 < a.assoc.flips.size(); ++i) os << "f " << to_string(a.assoc.flips[i]) << '\n';
        os << "closing: f " << to_string(a.assoc.flips.back()) << '\n';
        return os.str();
    }
    os << "start:";
    for (int v : a.perm.start) os << ' ' << v;
    os << '\n';
    for (const auto& t : a.perm.flips) os << "t " << t.a << ' ' << t.b << '\n';
    if (a.closing) os << "closing: t " << a.closing->a << ' ' << a.closing->b << '\n';
    return os.str();
}

std::string to_json(const Artifact& a) {
    json j;
    j["format"] = "graycode";
    j["version"] = 1;
    j["kind"] = target_name(a.target);
    j["n"] = a.n;
    if (a.r) j["r"] = *a.r;
    if (a.target == Target::Assoc) {
        j["start"] = a.assoc.start.serialize();
        json fs = json::array();
        for (std::size_t i = 0; i + 1 < a.assoc.flips.size(); ++i) fs.push_back(to_string(a.assoc.flips[i]));
        j["flips"] = std::move(fs);
        j["closing"] = to_string(a.assoc.flips.back());
    } else {
        j["start"] = a.perm.start;
        json fs = json::array();
        for (const auto& t : a.perm.flips) fs.push_back({t.a, t.b});
        j["flips"] = std::move(fs);
        if (a.closing) j["closing"] = {a.closing->a, a.closing->b};
    }
    return j.dump() + "\n";
}

Artifact parse_artifact(const std::string& s) {
    auto p = s.find_first_not_of(" \t\r\n");
    if (p == std::string::npos) throw DomainError("empty input");
    return s[p] == '{' ? parse_json(s) : parse_text(s);
}

bool operator==(const Artifact& x, const Artifact& y) {
    if (x.target != y.target || x.n != y.n || x.r != y.r) return false;
    if (x.target == Target::Assoc)
        return x.assoc.n == y.assoc.n && x.assoc.start == y.assoc.start && x.assoc.flips == y.assoc.flips;
    return x.perm.start == y.perm.start && x.perm.flips == y.perm.flips && x.perm.cyclic == y.perm.cyclic && x.closing == y.closing;
}

} // namespace graycode
