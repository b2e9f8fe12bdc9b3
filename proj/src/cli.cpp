#include "graycode/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "graycode/errors.hpp"
#include "graycode/perm_balanced_all.hpp"
#include "graycode/perm_cadj.hpp"
#include "graycode/perm_permutahedron.hpp"

namespace graycode {

namespace {

struct Request {
    std::string target;
    int n = 0;
    std::optional<int> r;
    std::optional<int> m;
    std::string format = "text";
    std::string out;
};

Target checked_target(const Request& q) {
    auto t = parse_target(q.target);
    if (!t) throw DomainError("unknown target '" + q.target + "'");
    bool wants_r = *t == Target::Assoc || *t == Target::PermAdjRainbow;
    if (q.r && !wants_r) throw DomainError("--r applies to assoc and perm-adj-rainbow only");
    if (!q.r && wants_r) throw DomainError("--r is required for " + q.target);
    if (q.m && *t != Target::PermAll) throw DomainError("--m applies to perm-all only");
    switch (*t) {
    case Target::PermAll:
        if (q.n < 1 || q.n > 10) throw DomainError("perm-all needs 1 <= n <= 10");
        if (q.m && (*q.m < 2 || *q.m > q.n)) throw DomainError("perm-all needs 2 <= m <= n");
        break;
    case Target::PermCadj:
        if (q.n < 2 || q.n > 10 || q.n % 2) throw DomainError("perm-cadj needs even 2 <= n <= 10");
        break;
    case Target::PermAdjRainbow:
        if (*q.r == 2 && (q.n < 5 || q.n > 16)) throw DomainError("perm-adj-rainbow r=2 needs 5 <= n <= 16");
        if (*q.r == 3 && (q.n < 3 || q.n > 16 || q.n % 2 == 0)) throw DomainError("perm-adj-rainbow r=3 needs odd 3 <= n <= 16");
        if (*q.r != 2 && *q.r != 3) throw DomainError("perm-adj-rainbow needs r in {2, 3}");
        break;
    case Target::Assoc:
        if (q.n < 45 || !label_capacity_ok(q.n) || label_length(q.n) > 30) throw DomainError("assoc needs 45 <= n <= 69");
        if (*q.r < 1 || *q.r > 2 * q.n + 2) throw DomainError("assoc needs 1 <= r <= 2n+2");
        break;
    }
    return *t;
}

Artifact generate(const Request& q) {
    Target t = checked_target(q);
    switch (t) {
    case Target::PermAll:
        if (q.m && *q.m < q.n) return make_artifact(t, lift_rainbow(balanced(*q.m), q.n), 2 * factorial(*q.m - 2));
        return make_artifact(t, balanced(q.n).code, std::nullopt);
    case Target::PermCadj:
        return make_artifact(t, balanced_cadj(q.n).code, std::nullopt);
    case Target::PermAdjRainbow:
        return make_artifact(t, (*q.r == 2 ? rainbow2(q.n) : rainbow3(q.n)).code, *q.r);
    case Target::Assoc:
        return make_artifact(r_rainbow_cycle(q.n, *q.r));
    }
    throw DomainError("unknown target");
}

void info(const Request& q, std::ostream& out) {
    Target t = checked_target(q);
    out << "target: " << target_name(t) << '\n' << "n: " << q.n << '\n';
    long long colors = 0, mult = 0, length = 0;
    switch (t) {
    case Target::PermAll:
        colors = static_cast<long long>(q.n) * (q.n - 1) / 2;
        mult = q.m && *q.m < q.n ? 2 * factorial(*q.m - 2) : q.n >= 2 ? 2 * factorial(q.n - 2) : 0;
        length = q.m && *q.m < q.n ? mult * colors : factorial(q.n);
        out << "semantics: values\n" << "objects: " << factorial(q.n) << '\n';
        break;
    case Target::PermCadj:
        colors = q.n;
        mult = factorial(q.n - 1);
        length = factorial(q.n);
        out << "semantics: indices\n" << "objects: " << factorial(q.n) << '\n';
        break;
    case Target::PermAdjRainbow:
        colors = q.n - 1;
        mult = *q.r;
        length = mult * colors;
        out << "semantics: indices\n" << "objects: " << factorial(q.n) << '\n';
        break;
    case Target::Assoc:
        colors = static_cast<long long>(q.n) * (q.n - 1) / 2 - q.n;
        mult = *q.r;
        length = mult * colors;
        out << "label_length: " << label_length(q.n) << '\n';
        break;
    }
    out << "colors: " << colors << '\n' << "multiplicity: " << mult << '\n' << "cycle_length: " << length << '\n';
}

} // namespace

Certificate certify(const Artifact& a) {
    Certificate c;
    switch (a.target) {
    case Target::PermAll:
        if (a.r) c = verify_perm_code(a.perm, FlipModel::All, false, *a.r);
        else c = verify_perm_code(a.perm, FlipModel::All, true, a.n >= 2 ? std::optional<long long>(2 * factorial(a.n - 2)) : std::nullopt);
        break;
    case Target::PermCadj:
        c = verify_perm_code(a.perm, FlipModel::Cadj, true, factorial(a.n - 1));
        break;
    case Target::PermAdjRainbow:
        c = verify_perm_code(a.perm, FlipModel::Adj, false, a.r);
        if (!a.r) c.failures.push_back("header has no r");
        break;
    case Target::Assoc:
        c = verify_assoc_cycle(a.assoc, a.r);
        if (!a.r) c.failures.push_back("header has no r");
        break;
    }
    if (a.target != Target::Assoc && a.perm.cyclic && a.closing != a.perm.closing())
        c.failures.push_back("declared closing flip does not close the cycle");
    c.pass = c.failures.empty();
    return c;
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Balanced Gray codes on permutations and rainbow cycles on the associahedron", "graycode"};
    app.require_subcommand(1);
    const std::vector<std::string> targets{"perm-all", "perm-cadj", "perm-adj-rainbow", "assoc"};

    Request q;
    auto add_params = [&](CLI::App* sub) {
        sub->add_option("target", q.target, "perm-all | perm-cadj | perm-adj-rainbow | assoc")->required()->check(CLI::IsMember(targets));
        sub->add_option("--n", q.n, "order, or polygon size for assoc")->required();
        sub->add_option("--r", q.r, "multiplicity (assoc, perm-adj-rainbow)");
        sub->add_option("--m", q.m, "base order of the rainbow lift (perm-all)");
    };
    CLI::App* gen = app.add_subcommand("gen", "generate a code or cycle");
    add_params(gen);
    gen->add_option("--format", q.format, "text | json")->check(CLI::IsMember({"text", "json"}));
    gen->add_option("--out", q.out, "output file (default stdout)");

    std::string path = "-";
    CLI::App* ver = app.add_subcommand("verify", "re-certify a generated file");
    ver->add_option("file", path, "file to check, '-' for stdin");

    CLI::App* inf = app.add_subcommand("info", "print expected sizes for a target");
    add_params(inf);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen) {
            Artifact a = generate(q);
            std::string body = q.format == "json" ? to_json(a) : to_text(a);
            if (q.out.empty() || q.out == "-") {
                out << body;
            } else {
                std::ofstream f(q.out, std::ios::binary);
                if (!(f << body)) {
                    err << "cannot write " << q.out << '\n';
                    return 2;
                }
            }
            return 0;
        }
        if (*inf) {
            info(q, out);
            return 0;
        }
        std::stringstream buf;
        if (path == "-") {
            buf << in.rdbuf();
        } else {
            std::ifstream f(path, std::ios::binary);
            if (!f) {
                err << "cannot read " << path << '\n';
                return 2;
            }
            buf << f.rdbuf();
        }
        Certificate c = certify(parse_artifact(buf.str()));
        out << c.render();
        return c.pass ? 0 : 1;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return 2;
    }
}

} // namespace graycode
