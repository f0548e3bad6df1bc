// pienclose command line: guaranteed rational-interval enclosures of pi.
// Talks to the library exclusively through the C API.

#include <cstdlib>
#include <future>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pienclose/pienclose.h"

namespace {

using nlohmann::json;

struct CStr {
    char* p = nullptr;
    CStr() = default;
    CStr(const CStr&) = delete;
    CStr& operator=(const CStr&) = delete;
    ~CStr() { pienc_string_free(p); }
    std::string str() const { return p == nullptr ? std::string() : std::string(p); }
};

struct Enc {
    pienc_enclosure* p = nullptr;
    Enc() = default;
    Enc(Enc&& o) noexcept : p(std::exchange(o.p, nullptr)) {}
    Enc& operator=(Enc&& o) noexcept {
        std::swap(p, o.p);
        return *this;
    }
    Enc(const Enc&) = delete;
    Enc& operator=(const Enc&) = delete;
    ~Enc() { pienc_enclosure_free(p); }
};

int exit_for(pienc_status s) {
    switch (s) {
    case PIENC_OK: return 0;
    case PIENC_EINVAL:
    case PIENC_EDOMAIN: return 2;
    case PIENC_EINCONSISTENT: return 3;
    default: return 3;
    }
}

[[noreturn]] void die(pienc_status s) {
    std::cerr << "error: " << pienc_last_error() << "\n";
    std::exit(exit_for(s));
}

[[noreturn]] void usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    std::exit(2);
}

const char* work_unit(const std::string& method) {
    if (method == "arcsin") return "terms";
    if (method == "cosroot") return "steps";
    if (method == "archimedes") return "doublings";
    if (method == "quadrature") return "subintervals";
    return "total work";
}

struct Fields {
    std::string method, lo, hi, width, exact_lo, exact_hi, digits;
    unsigned long work = 0;
    double elapsed = 0.0;
    bool converged = true;
};

Fields fields_of(const Enc& e, int frac_digits) {
    Fields f;
    f.method = pienc_enclosure_method(e.p);
    f.work = pienc_enclosure_work(e.p);
    f.elapsed = pienc_enclosure_elapsed_ms(e.p);
    f.converged = pienc_enclosure_converged(e.p) != 0;
    CStr lo, hi, width;
    if (pienc_status s = pienc_enclosure_decimal(e.p, frac_digits, &lo.p, &hi.p, &width.p);
        s != PIENC_OK) {
        die(s);
    }
    f.lo = lo.str();
    f.hi = hi.str();
    f.width = width.str();
    CStr xlo, xhi;
    if (pienc_status s = pienc_enclosure_endpoints(e.p, 1, &xlo.p, &xhi.p); s != PIENC_OK) die(s);
    f.exact_lo = xlo.str();
    f.exact_hi = xhi.str();
    CStr digits;
    if (pienc_status s = pienc_enclosure_digits(e.p, &digits.p); s != PIENC_OK) die(s);
    f.digits = digits.str();
    return f;
}

int numeral_count(const std::string& s) {
    int n = 0;
    for (char c : s) {
        if (c >= '0' && c <= '9') ++n;
    }
    return n;
}

void print_text_block(const Fields& f, const std::string& series) {
    std::cout << "method      " << f.method << "\n"
              << "work        " << f.work << " " << work_unit(f.method) << "\n"
              << "enclosure   [" << f.lo << ", " << f.hi << "]\n"
              << "exact       [" << f.exact_lo << ", " << f.exact_hi << "]\n"
              << "width       <= " << f.width << "\n"
              << "elapsed_ms  " << f.elapsed << "\n";
    if (!series.empty()) std::cout << "series      " << series << "\n";
    if (!f.converged) {
        std::cout << "note        stopped before the requested width (sign undecidable at the "
                     "order cap); the interval above is still guaranteed\n";
    }
}

json to_json(const Fields& f) {
    return json{{"method", f.method},
                {"lo", json{{"decimal", f.lo}, {"exact", f.exact_lo}}},
                {"hi", json{{"decimal", f.hi}, {"exact", f.exact_hi}}},
                {"width", f.width},
                {"work", f.work},
                {"elapsed_ms", f.elapsed}};
}

std::string csv_line(const Fields& f) {
    return f.method + "," + std::to_string(f.work) + "," + f.lo + "," + f.hi + "," + f.width;
}

const char* kCsvHeader = "method,work,lo,hi,width";

std::string series_prefix_text(unsigned long terms) {
    unsigned long shown = terms <= 10 ? terms : 10;
    CStr text;
    if (pienc_status s = pienc_series_prefix(shown, &text.p); s != PIENC_OK) die(s);
    std::string out = text.str();
    if (shown < terms) out += " + ...";
    return out;
}

struct PiOptions {
    std::string method = "all";
    unsigned long terms = 0;
    std::string target_width;
    unsigned long doublings = 0;
    unsigned long subintervals = 0;
    int bits = 0;
    std::string format = "text";
    bool has_terms = false, has_width = false, has_doublings = false, has_subintervals = false;
};

void require_budget(const PiOptions& o) {
    struct Row {
        const char* method;
        bool wanted;
        const char* flag;
    };
    const Row rows[] = {{"arcsin", o.has_terms, "--terms"},
                        {"cosroot", o.has_width, "--target-width"},
                        {"archimedes", o.has_doublings, "--doublings"},
                        {"quadrature", o.has_subintervals, "--subintervals"},
                        {"all", o.has_width, "--target-width"}};
    for (const Row& r : rows) {
        if (o.method != r.method) continue;
        if (!r.wanted) {
            usage_error("method '" + o.method + "' needs " + r.flag);
        }
        int extras = (o.has_terms && std::string(r.flag) != "--terms") +
                     (o.has_width && std::string(r.flag) != "--target-width") +
                     (o.has_doublings && std::string(r.flag) != "--doublings") +
                     (o.has_subintervals && std::string(r.flag) != "--subintervals");
        if (extras > 0) {
            usage_error("method '" + o.method + "' takes only " + r.flag +
                        " as its work budget");
        }
        return;
    }
    usage_error("unknown method '" + o.method + "'");
}

std::pair<pienc_status, Enc> run_method(const std::string& method, const PiOptions& o) {
    Enc e;
    pienc_status s = PIENC_EINTERNAL;
    if (method == "arcsin") {
        unsigned long n = o.has_terms
                              ? o.terms
                              : static_cast<unsigned long>(
                                    pienc_budget_for_width("arcsin", o.target_width.c_str()));
        s = pienc_pi_arcsin(n, o.bits, &e.p);
    } else if (method == "cosroot") {
        s = pienc_pi_cosroot(o.target_width.c_str(), o.bits, &e.p);
    } else if (method == "archimedes") {
        unsigned long k = o.has_doublings
                              ? o.doublings
                              : static_cast<unsigned long>(
                                    pienc_budget_for_width("archimedes", o.target_width.c_str()));
        s = pienc_pi_archimedes(k, o.bits, &e.p);
    } else if (method == "quadrature") {
        unsigned long n = o.has_subintervals
                              ? o.subintervals
                              : static_cast<unsigned long>(
                                    pienc_budget_for_width("quadrature", o.target_width.c_str()));
        s = pienc_pi_quadrature(n, o.bits, &e.p);
    }
    return {s, std::move(e)};
}

int cmd_pi(const PiOptions& o) {
    require_budget(o);

    if (o.method != "all") {
        auto [s, e] = run_method(o.method, o);
        if (s != PIENC_OK) die(s);
        Fields f = fields_of(e, 0);
        std::string series = o.method == "arcsin" ? series_prefix_text(o.terms) : "";
        if (o.format == "text") {
            print_text_block(f, series);
        } else if (o.format == "json") {
            std::cout << to_json(f).dump(2) << "\n";
        } else {
            std::cout << kCsvHeader << "\n" << csv_line(f) << "\n";
        }
        return 0;
    }

    // run the four methods concurrently, report in a fixed order
    if (pienc_budget_for_width("arcsin", o.target_width.c_str()) < 0) {
        usage_error(pienc_last_error());
    }
    const std::string methods[] = {"arcsin", "cosroot", "archimedes", "quadrature"};
    std::vector<std::future<std::pair<pienc_status, Enc>>> futures;
    futures.reserve(4);
    for (const std::string& m : methods) {
        futures.push_back(std::async(std::launch::async, [&o, m] { return run_method(m, o); }));
    }
    std::vector<Enc> encs;
    for (auto& fut : futures) {
        auto [s, e] = fut.get();
        if (s != PIENC_OK) die(s);
        encs.push_back(std::move(e));
    }

    const pienc_enclosure* raw[4] = {encs[0].p, encs[1].p, encs[2].p, encs[3].p};
    Enc common;
    if (pienc_status s = pienc_cross_check(raw, 4, &common.p); s != PIENC_OK) die(s);

    std::vector<Fields> fs;
    fs.reserve(4);
    for (const Enc& e : encs) fs.push_back(fields_of(e, 0));
    Fields inter = fields_of(common, 0);

    if (o.format == "text") {
        for (const Fields& f : fs) {
            print_text_block(f, "");
            std::cout << "\n";
        }
        std::cout << "intersection  [" << inter.lo << ", " << inter.hi << "]  width <= "
                  << inter.width << "\n";
        std::cout << "guaranteed digits  " << inter.digits << "  (" << numeral_count(inter.digits)
                  << " digits)\n";
    } else if (o.format == "json") {
        json j;
        j["enclosures"] = json::array();
        for (const Fields& f : fs) j["enclosures"].push_back(to_json(f));
        j["intersection"] = to_json(inter);
        j["guaranteed_digits"] = inter.digits;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << kCsvHeader << "\n";
        for (const Fields& f : fs) std::cout << csv_line(f) << "\n";
        std::cout << csv_line(inter) << "\n";
    }
    return 0;
}

int cmd_table(const PiOptions& o) {
    if (o.method == "all") usage_error("table needs a single method, not 'all'");
    require_budget(o);

    std::vector<unsigned long> schedule;
    if (o.method == "arcsin" || o.method == "quadrature") {
        unsigned long max = o.method == "arcsin" ? o.terms : o.subintervals;
        if (max < 1) usage_error("work budget must be at least 1");
        for (unsigned long w = 1; w <= max; w *= 2) {
            schedule.push_back(w);
            if (w > max / 2) break; // next doubling would overflow past max
        }
        if (schedule.back() != max) schedule.push_back(max);
    } else if (o.method == "archimedes") {
        for (unsigned long k = 0; k <= o.doublings; ++k) schedule.push_back(k);
    } else { // cosroot: one row per bisection step toward the target width
        long steps = pienc_budget_for_width("cosroot", o.target_width.c_str());
        if (steps < 0) usage_error(pienc_last_error());
        for (long k = 1; k <= steps; ++k) schedule.push_back(static_cast<unsigned long>(k));
    }

    std::cout << kCsvHeader << "\n";
    for (unsigned long w : schedule) {
        Enc e;
        pienc_status s = PIENC_EINTERNAL;
        if (o.method == "arcsin") s = pienc_pi_arcsin(w, o.bits, &e.p);
        else if (o.method == "cosroot") s = pienc_pi_cosroot_steps(w, o.bits, &e.p);
        else if (o.method == "archimedes") s = pienc_pi_archimedes(w, o.bits, &e.p);
        else s = pienc_pi_quadrature(w, o.bits, &e.p);
        if (s != PIENC_OK) die(s);
        std::cout << csv_line(fields_of(e, 0)) << "\n";
    }
    return 0;
}

int cmd_verify(bool inject_disjoint) {
    CStr report;
    int all_passed = 0;
    if (pienc_status s = pienc_verify(inject_disjoint ? 1 : 0, &report.p, &all_passed);
        s != PIENC_OK) {
        die(s);
    }
    std::cout << report.str();
    return all_passed != 0 ? 0 : 1;
}

int cmd_demo(const std::string& format) {
    if (format != "json") {
        CStr text;
        if (pienc_status s = pienc_demo_report(format == "machine" ? 1 : 0, &text.p);
            s != PIENC_OK) {
            die(s);
        }
        std::cout << text.str();
        return 0;
    }
    // the machine form is k=v per line; fold it into a structured object
    CStr machine;
    if (pienc_status s = pienc_demo_report(1, &machine.p); s != PIENC_OK) die(s);
    json j;
    j["nodes"] = json::array();
    std::string body = machine.str();
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t eol = body.find('\n', pos);
        if (eol == std::string::npos) eol = body.size();
        std::string line = body.substr(pos, eol - pos);
        pos = eol + 1;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        if (key.rfind("node.", 0) == 0) {
            j["nodes"].push_back(json{{"id", key}, {"text", value}});
        } else if (key == "edge.cycle") {
            j["cycle"] = value;
        } else if (key == "deadend.parametric") {
            j["deadend"] = value;
        } else if (key == "repair") {
            j["repair"] = value;
        }
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"guaranteed rational-interval enclosures of pi by four independent methods"};
    app.require_subcommand(1);

    PiOptions opt;

    CLI::App* pi = app.add_subcommand("pi", "compute an enclosure of pi");
    pi->add_option("--method", opt.method, "arcsin|cosroot|archimedes|quadrature|all")
        ->check(CLI::IsMember({"arcsin", "cosroot", "archimedes", "quadrature", "all"}));
    pi->add_option("--terms", opt.terms, "series terms (arcsin)");
    pi->add_option("--target-width", opt.target_width, "width goal (cosroot, all)");
    pi->add_option("--doublings", opt.doublings, "polygon doublings (archimedes)");
    pi->add_option("--subintervals", opt.subintervals, "Riemann subintervals (quadrature)");
    pi->add_option("--bits", opt.bits, "working precision in fractional bits (0 = adaptive)");
    pi->add_option("--format", opt.format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    CLI::App* table = app.add_subcommand("table", "convergence table as CSV");
    table->add_option("--method", opt.method, "arcsin|cosroot|archimedes|quadrature")
        ->required()
        ->check(CLI::IsMember({"arcsin", "cosroot", "archimedes", "quadrature"}));
    table->add_option("--terms", opt.terms, "maximum terms (arcsin)");
    table->add_option("--target-width", opt.target_width, "width goal (cosroot)");
    table->add_option("--doublings", opt.doublings, "maximum doublings (archimedes)");
    table->add_option("--subintervals", opt.subintervals, "maximum subintervals (quadrature)");
    table->add_option("--bits", opt.bits, "working precision in fractional bits (0 = adaptive)");

    bool inject_disjoint = false;
    CLI::App* verify = app.add_subcommand("verify", "run the invariant suite");
    verify->add_flag("--inject-disjoint", inject_disjoint,
                     "sabotage the cross-check inputs to prove the negative path fires");

    std::string demo_format = "text";
    CLI::App* demo = app.add_subcommand("demo-circularity",
                                        "walk the circular definition of pi and its repair");
    demo->add_option("--format", demo_format, "text|machine|json")
        ->check(CLI::IsMember({"text", "machine", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    for (CLI::App* sub : {pi, table}) {
        if (sub->parsed()) {
            opt.has_terms = sub->count("--terms") > 0;
            opt.has_width = sub->count("--target-width") > 0;
            opt.has_doublings = sub->count("--doublings") > 0;
            opt.has_subintervals = sub->count("--subintervals") > 0;
        }
    }

    if (pi->parsed()) return cmd_pi(opt);
    if (table->parsed()) return cmd_table(opt);
    if (verify->parsed()) return cmd_verify(inject_disjoint);
    return cmd_demo(demo_format);
}
