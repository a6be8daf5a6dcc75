#include <lndkit.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

using nlohmann::json;

namespace {

struct CmdError {
    lndkit_status status;
    std::string message;
};

[[noreturn]] void bail(lndkit_status st) {
    throw CmdError{st, lndkit_last_error_message()};
}

void check(lndkit_status st) {
    if (st != LNDKIT_OK) bail(st);
}

template <typename T, void (*Free)(T*)>
class Handle {
public:
    Handle() = default;
    explicit Handle(T* h) : h_(h) {}
    ~Handle() {
        if (h_) Free(h_);
    }
    Handle(Handle&& o) noexcept : h_(std::exchange(o.h_, nullptr)) {}
    Handle& operator=(Handle&& o) noexcept {
        std::swap(h_, o.h_);
        return *this;
    }
    Handle(const Handle&) = delete;
    Handle& operator=(const Handle&) = delete;
    T* get() const { return h_; }
    T** out() { return &h_; }

private:
    T* h_ = nullptr;
};

using PolyH = Handle<lndkit_poly, lndkit_poly_free>;
using DerH = Handle<lndkit_derivation, lndkit_derivation_free>;
using AutH = Handle<lndkit_aut, lndkit_aut_free>;

std::string take(char* s) {
    std::string out = s ? s : "";
    lndkit_string_free(s);
    return out;
}

PolyH parse_poly_arg(const std::string& text) {
    PolyH p;
    lndkit_status st = lndkit_poly_parse(text.c_str(), p.out());
    if (st != LNDKIT_OK) {
        std::string msg = lndkit_last_error_message();
        long pos = lndkit_last_error_position();
        if (pos >= 0) msg += " at offset " + std::to_string(pos);
        throw CmdError{st, msg + " in \"" + text + "\""};
    }
    return p;
}

DerH make_derivation(const std::string& p_text, const std::string& q_text) {
    PolyH p = parse_poly_arg(p_text);
    PolyH q = parse_poly_arg(q_text);
    DerH d;
    check(lndkit_derivation_new(p.get(), q.get(), d.out()));
    return d;
}

std::vector<DerH> parse_pairs(const std::vector<std::string>& args) {
    if (args.empty() || args.size() % 2 != 0)
        throw CmdError{LNDKIT_ERR_INVALID_ARGUMENT, "expected one or more P Q argument pairs"};
    std::vector<DerH> out;
    out.reserve(args.size() / 2);
    for (size_t i = 0; i < args.size(); i += 2)
        out.push_back(make_derivation(args[i], args[i + 1]));
    return out;
}

std::vector<const lndkit_derivation*> raw_pointers(const std::vector<DerH>& hs) {
    std::vector<const lndkit_derivation*> out;
    out.reserve(hs.size());
    for (const auto& h : hs) out.push_back(h.get());
    return out;
}

json parse_payload(const std::string& text) { return json::parse(text); }

std::string derivation_line(const json& d) {
    return d["p"].get<std::string>() + " , " + d["q"].get<std::string>();
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

struct Outcome {
    json payload;
    std::string human;
    int exit_code = 0;
};

int exit_for(lndkit_status st) {
    switch (st) {
        case LNDKIT_OK: return 0;
        case LNDKIT_ERR_PARSE:
        case LNDKIT_ERR_INVALID_ARGUMENT:
        case LNDKIT_ERR_ZERO_POLYNOMIAL: return 1;
        default: return 2;
    }
}

Outcome run_bracket(const std::vector<std::string>& a) {
    DerH d1 = make_derivation(a[0], a[1]);
    DerH d2 = make_derivation(a[2], a[3]);
    DerH r;
    check(lndkit_bracket(d1.get(), d2.get(), r.out()));
    char *ps = nullptr, *qs = nullptr;
    check(lndkit_derivation_parts(r.get(), &ps, &qs));
    json payload{{"p", take(ps)}, {"q", take(qs)}};
    return {payload, derivation_line(payload), 0};
}

Outcome run_apply(const std::vector<std::string>& a) {
    DerH d = make_derivation(a[0], a[1]);
    PolyH h = parse_poly_arg(a[2]);
    PolyH r;
    check(lndkit_apply(d.get(), h.get(), r.out()));
    char* s = nullptr;
    check(lndkit_poly_str(r.get(), &s));
    std::string text = take(s);
    return {json(text), text, 0};
}

Outcome run_div(const std::vector<std::string>& a) {
    DerH d = make_derivation(a[0], a[1]);
    PolyH r;
    check(lndkit_divergence(d.get(), r.out()));
    char* s = nullptr;
    check(lndkit_poly_str(r.get(), &s));
    std::string text = take(s);
    return {json(text), text, 0};
}

Outcome run_jac(const std::vector<std::string>& a) {
    PolyH f = parse_poly_arg(a[0]);
    DerH r;
    check(lndkit_jacobian_derivation(f.get(), r.out()));
    char *ps = nullptr, *qs = nullptr;
    check(lndkit_derivation_parts(r.get(), &ps, &qs));
    json payload{{"p", take(ps)}, {"q", take(qs)}};
    return {payload, derivation_line(payload), 0};
}

Outcome run_is_lnd(const std::vector<std::string>& a) {
    DerH d = make_derivation(a[0], a[1]);
    char* s = nullptr;
    int is_lnd = 0;
    check(lndkit_is_lnd(d.get(), &s, &is_lnd));
    json payload = parse_payload(take(s));
    std::ostringstream h;
    h << "locally nilpotent: " << yesno(is_lnd != 0) << "\n";
    if (is_lnd) {
        h << "a = " << payload["form"]["a"].get<std::string>() << "\n";
        h << "f = " << payload["form"]["f"].get<std::string>() << "\n";
        h << "mate = " << payload["form"]["mate"].get<std::string>() << "\n";
        h << "index_x = " << payload["index_x"].get<int>() << "\n";
        h << "index_y = " << payload["index_y"].get<int>();
    } else {
        h << "reason: " << payload["reason"].get<std::string>() << "\n";
        h << "witness = " << payload["witness"].get<std::string>();
        if (payload.contains("eigenvalue"))
            h << "\neigenvalue = " << payload["eigenvalue"].get<std::string>();
    }
    return {payload, h.str(), is_lnd ? 0 : 2};
}

Outcome run_kernel(const std::vector<std::string>& a, int bound) {
    DerH d = make_derivation(a[0], a[1]);
    char* s = nullptr;
    check(lndkit_kernel_generator(d.get(), bound, &s));
    std::string text = take(s);
    return {json(text), text, 0};
}

Outcome run_rentschler(const std::vector<std::string>& a) {
    DerH d = make_derivation(a[0], a[1]);
    char* s = nullptr;
    check(lndkit_rentschler(d.get(), &s));
    json payload = parse_payload(take(s));
    std::ostringstream h;
    h << "a = " << payload["a"].get<std::string>() << "\n";
    h << "f = " << payload["f"].get<std::string>() << "\n";
    h << "mate = " << payload["mate"].get<std::string>();
    return {payload, h.str(), 0};
}

Outcome run_rectify(const std::vector<std::string>& a) {
    PolyH f = parse_poly_arg(a[0]);
    char* s = nullptr;
    int is_coord = 0;
    check(lndkit_rectify(f.get(), &s, &is_coord));
    json payload = parse_payload(take(s));
    std::ostringstream h;
    h << "coordinate: " << yesno(is_coord != 0) << "\n";
    if (is_coord) {
        h << "theta: " << payload["theta"].dump() << "\n";
        h << "theta(x) = " << payload["theta"]["x"].get<std::string>() << "\n";
        h << "theta(y) = " << payload["theta"]["y"].get<std::string>() << "\n";
        h << "mate = " << payload["mate"].get<std::string>();
    } else {
        h << "stage: " << payload["stage"].get<std::string>() << "\n";
        h << "witness = " << payload["witness"].get<std::string>();
    }
    return {payload, h.str(), is_coord ? 0 : 2};
}

void append_closure_text(std::ostringstream& h, const json& payload) {
    h << "dimension = " << payload["dimension"].get<int>() << "\n";
    h << "capped = " << yesno(payload["capped"].get<bool>()) << "\n";
    h << "basis:";
    for (const auto& d : payload["basis"]) h << "\n  " << derivation_line(d);
    if (payload.contains("series")) {
        const json& s = payload["series"];
        h << "\ndims =";
        for (const auto& v : s["dims"]) h << " " << v.get<int>();
        h << "\nnilpotent: " << yesno(s["nilpotent"].get<bool>());
        if (s["nilpotent"].get<bool>()) h << " (class " << s["class"].get<int>() << ")";
    }
}

Outcome run_closure(const std::vector<std::string>& a, int cap) {
    std::vector<DerH> gens = parse_pairs(a);
    auto raw = raw_pointers(gens);
    char* s = nullptr;
    check(lndkit_closure(raw.data(), raw.size(), cap, &s));
    json payload = parse_payload(take(s));
    std::ostringstream h;
    append_closure_text(h, payload);
    return {payload, h.str(), 0};
}

Outcome run_triangularize(const std::vector<std::string>& a) {
    std::vector<DerH> gens = parse_pairs(a);
    auto raw = raw_pointers(gens);
    char* s = nullptr;
    check(lndkit_triangularize(raw.data(), raw.size(), &s));
    json payload = parse_payload(take(s));
    std::ostringstream h;
    h << "case: " << payload["case"].get<std::string>() << "\n";
    h << "verified: " << yesno(payload["verified"].get<bool>()) << "\n";
    h << "theta: " << payload["theta"].dump() << "\n";
    h << "theta(x) = " << payload["theta"]["x"].get<std::string>() << "\n";
    h << "theta(y) = " << payload["theta"]["y"].get<std::string>() << "\n";
    h << "images:";
    for (const auto& d : payload["images"]) h << "\n  " << derivation_line(d);
    h << "\nclosure dimension = " << payload["closure"]["dimension"].get<int>();
    return {payload, h.str(), 0};
}

Outcome run_verify(const std::string& theta_file, const std::vector<std::string>& a) {
    std::ifstream in(theta_file);
    if (!in)
        throw CmdError{LNDKIT_ERR_INVALID_ARGUMENT, "cannot read theta file '" + theta_file + "'"};
    std::stringstream buf;
    buf << in.rdbuf();
    AutH theta;
    check(lndkit_aut_from_json(buf.str().c_str(), theta.out()));
    std::vector<DerH> gens = parse_pairs(a);
    auto raw = raw_pointers(gens);
    char* s = nullptr;
    int ok = 0;
    check(lndkit_verify_conjugation(theta.get(), raw.data(), raw.size(), &s, &ok));
    json payload = parse_payload(take(s));
    std::ostringstream h;
    h << "ok: " << yesno(ok != 0) << "\n";
    h << "all images triangular: " << yesno(payload["all_triangular"].get<bool>()) << "\n";
    h << "closure uncapped: " << yesno(payload["closure_uncapped"].get<bool>()) << "\n";
    h << "nilpotent: " << yesno(payload["nilpotent"].get<bool>()) << "\n";
    h << "images:";
    for (const auto& d : payload["images"]) h << "\n  " << derivation_line(d);
    return {payload, h.str(), ok ? 0 : 2};
}

Outcome run_fuzz(uint64_t seed, int cases, int recovery, int max_degree) {
    char* s = nullptr;
    int pass = 0;
    check(lndkit_fuzz(seed, cases, recovery, max_degree, &s, &pass));
    json payload = parse_payload(take(s));
    std::ostringstream h;
    h << "seed = " << payload["seed"].get<uint64_t>() << "\n";
    for (const auto& p : payload["properties"]) {
        h << p["name"].get<std::string>() << ": cases=" << p["cases"].get<int>()
          << " failures=" << p["failures"].get<int>();
        if (p["expected_negatives"].get<int>() > 0)
            h << " expected_negatives=" << p["expected_negatives"].get<int>();
        if (p.contains("counterexample")) h << "\n  counterexample: " << p["counterexample"].dump();
        h << "\n";
    }
    h << "pass: " << yesno(pass != 0);
    return {payload, h.str(), pass ? 0 : 2};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculus of polynomial derivations of Q[x,y]"};
    app.require_subcommand(1);

    bool as_json = false, timing = false;
    uint64_t seed = 0;
    app.add_flag("--json", as_json, "emit a JSON result document");
    app.add_flag("--timing", timing, "report wall time (stderr, plus a time_ms field with --json)");
    app.add_option("--seed", seed, "seed for the fuzz subcommand");

    std::string command;
    std::function<Outcome()> action;

    auto pair_sub = [&](const char* name, const char* desc, const char* arg_desc,
                        int count, auto make_action) {
        auto* sub = app.add_subcommand(name, desc);
        auto args = std::make_shared<std::vector<std::string>>();
        auto* opt = sub->add_option("args", *args, arg_desc);
        if (count > 0)
            opt->expected(count);
        else
            opt->expected(-1);
        sub->callback([&command, &action, name, args, make_action] {
            command = name;
            action = [args, make_action] { return make_action(*args); };
        });
        return sub;
    };

    pair_sub("bracket", "Lie bracket of two derivations", "P1 Q1 P2 Q2", 4,
             [](const std::vector<std::string>& a) { return run_bracket(a); });
    pair_sub("apply", "apply a derivation to a polynomial", "P Q H", 3,
             [](const std::vector<std::string>& a) { return run_apply(a); });
    pair_sub("div", "divergence of a derivation", "P Q", 2,
             [](const std::vector<std::string>& a) { return run_div(a); });
    pair_sub("jac", "derivation (-dF/dy, dF/dx) attached to F", "F", 1,
             [](const std::vector<std::string>& a) { return run_jac(a); });
    pair_sub("is-lnd", "decide local nilpotency with a certificate", "P Q", 2,
             [](const std::vector<std::string>& a) { return run_is_lnd(a); });
    pair_sub("rentschler", "certificate D = f'(a) D_a for a locally nilpotent D", "P Q", 2,
             [](const std::vector<std::string>& a) { return run_rentschler(a); });
    pair_sub("rectify", "decide whether A is a coordinate and straighten it", "A", 1,
             [](const std::vector<std::string>& a) { return run_rectify(a); });
    pair_sub("triangularize", "conjugate all generators to triangular form", "(P Q)+", -1,
             [](const std::vector<std::string>& a) { return run_triangularize(a); });

    {
        auto* sub = app.add_subcommand("kernel", "minimal-degree kernel generator");
        auto args = std::make_shared<std::vector<std::string>>();
        auto bound = std::make_shared<int>(0);
        sub->add_option("args", *args, "P Q")->expected(2);
        sub->add_option("--bound", *bound, "degree bound for the kernel search");
        sub->callback([&command, &action, args, bound] {
            command = "kernel";
            action = [args, bound] { return run_kernel(*args, *bound); };
        });
    }
    {
        auto* sub = app.add_subcommand("closure", "bracket closure of the spanned algebra");
        auto args = std::make_shared<std::vector<std::string>>();
        auto cap = std::make_shared<int>(0);
        sub->add_option("args", *args, "(P Q)+")->expected(-1);
        sub->add_option("--cap", *cap, "dimension cap (default 64)");
        sub->callback([&command, &action, args, cap] {
            command = "closure";
            action = [args, cap] { return run_closure(*args, *cap); };
        });
    }
    {
        auto* sub = app.add_subcommand("verify", "recheck a conjugation from a theta file");
        auto theta = std::make_shared<std::string>();
        auto args = std::make_shared<std::vector<std::string>>();
        sub->add_option("theta", *theta, "JSON file with the automorphism chain")->required();
        sub->add_option("args", *args, "(P Q)+")->expected(-1);
        sub->callback([&command, &action, theta, args] {
            command = "verify";
            action = [theta, args] { return run_verify(*theta, *args); };
        });
    }
    {
        auto* sub = app.add_subcommand("fuzz", "randomized property suite");
        auto cases = std::make_shared<int>(100);
        auto recovery = std::make_shared<int>(10);
        auto max_degree = std::make_shared<int>(3);
        sub->add_option("--cases", *cases, "cases per identity property");
        sub->add_option("--recovery", *recovery, "recovery property cases");
        sub->add_option("--max-degree", *max_degree, "degree bound for random polynomials");
        sub->callback([&command, &action, &seed, cases, recovery, max_degree] {
            command = "fuzz";
            action = [&seed, cases, recovery, max_degree] {
                return run_fuzz(seed, *cases, *recovery, *max_degree);
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    auto start = std::chrono::steady_clock::now();
    json doc;
    doc["format"] = "lndkit.result/1";
    doc["command"] = command;
    int rc = 0;
    try {
        Outcome out = action();
        doc["ok"] = true;
        doc["result"] = std::move(out.payload);
        rc = out.exit_code;
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        if (timing) doc["time_ms"] = ms;
        if (as_json) {
            std::cout << doc.dump() << "\n";
        } else {
            std::cout << out.human << "\n";
        }
        if (timing) std::cerr << "time: " << ms << " ms\n";
    } catch (const CmdError& e) {
        doc["ok"] = false;
        doc["error"] = json{{"code", lndkit_status_name(e.status)}, {"message", e.message}};
        rc = exit_for(e.status);
        if (as_json)
            std::cout << doc.dump() << "\n";
        else
            std::cerr << "error (" << lndkit_status_name(e.status) << "): " << e.message << "\n";
    }
    return rc;
}
