#include "pienclose/pienclose.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "arclength.hpp"
#include "errors.hpp"
#include "pi_methods.hpp"
#include "report.hpp"
#include "series.hpp"
#include "verify.hpp"

struct pienc_enclosure {
    pienc::Enclosure impl;
};

namespace {

thread_local std::string g_last_error = "no error";

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

pienc_status fail(pienc_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

template <typename F>
pienc_status guarded(F&& body) {
    try {
        return body();
    } catch (const pienc::InconsistencyError& e) {
        return fail(PIENC_EINCONSISTENT, e.what());
    } catch (const pienc::ParseError& e) {
        return fail(PIENC_EINVAL, e.what());
    } catch (const pienc::DomainError& e) {
        return fail(PIENC_EDOMAIN, e.what());
    } catch (const std::bad_alloc&) {
        return fail(PIENC_ENOMEM, "out of memory");
    } catch (const std::exception& e) {
        return fail(PIENC_EINTERNAL, e.what());
    } catch (...) {
        return fail(PIENC_EINTERNAL, "unknown error");
    }
}

pienc_status make_enclosure(pienc::Enclosure value, pienc_enclosure** out) {
    *out = new pienc_enclosure{std::move(value)};
    return PIENC_OK;
}

} // namespace

extern "C" {

const char* pienc_version(void) { return "1.0.0"; }

const char* pienc_status_str(pienc_status status) {
    switch (status) {
    case PIENC_OK: return "ok";
    case PIENC_EINVAL: return "invalid argument";
    case PIENC_EDOMAIN: return "domain error";
    case PIENC_EINCONSISTENT: return "inconsistent enclosures";
    case PIENC_ENOMEM: return "out of memory";
    case PIENC_EINTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* pienc_last_error(void) { return g_last_error.c_str(); }

void pienc_string_free(char* s) { std::free(s); }

void pienc_enclosure_free(pienc_enclosure* e) { delete e; }

pienc_status pienc_pi_arcsin(unsigned long terms, int bits, pienc_enclosure** out) {
    if (out == nullptr) return fail(PIENC_EINVAL, "null output pointer");
    return guarded([&] { return make_enclosure(pienc::pi_arcsin(terms, bits), out); });
}

pienc_status pienc_pi_cosroot(const char* target_width, int bits, pienc_enclosure** out) {
    if (out == nullptr || target_width == nullptr) {
        return fail(PIENC_EINVAL, "null output or width pointer");
    }
    return guarded([&] {
        return make_enclosure(pienc::pi_cosroot(pienc::Rational::parse(target_width), bits), out);
    });
}

pienc_status pienc_pi_cosroot_steps(unsigned long steps, int bits, pienc_enclosure** out) {
    if (out == nullptr) return fail(PIENC_EINVAL, "null output pointer");
    return guarded([&] { return make_enclosure(pienc::pi_cosroot_steps(steps, bits), out); });
}

pienc_status pienc_pi_archimedes(unsigned long doublings, int bits, pienc_enclosure** out) {
    if (out == nullptr) return fail(PIENC_EINVAL, "null output pointer");
    return guarded([&] { return make_enclosure(pienc::pi_archimedes(doublings, bits), out); });
}

pienc_status pienc_pi_quadrature(unsigned long subintervals, int bits, pienc_enclosure** out) {
    if (out == nullptr) return fail(PIENC_EINVAL, "null output pointer");
    return guarded([&] { return make_enclosure(pienc::pi_quadrature(subintervals, bits), out); });
}

pienc_status pienc_cross_check(const pienc_enclosure* const* list, size_t count,
                               pienc_enclosure** out) {
    if (out == nullptr || list == nullptr) return fail(PIENC_EINVAL, "null pointer");
    if (count == 0) return fail(PIENC_EINVAL, "cross-check needs at least one enclosure");
    for (size_t i = 0; i < count; ++i) {
        if (list[i] == nullptr) return fail(PIENC_EINVAL, "null enclosure in list");
    }
    return guarded([&] {
        std::vector<pienc::Enclosure> es;
        es.reserve(count);
        for (size_t i = 0; i < count; ++i) es.push_back(list[i]->impl);
        pienc::Interval value = pienc::cross_check(es);
        pienc::Interval exact = list[0]->impl.exact;
        unsigned long work = 0;
        double elapsed = 0.0;
        bool converged = true;
        for (size_t i = 0; i < count; ++i) {
            if (i > 0) exact = pienc::intersect(exact, list[i]->impl.exact);
            work += list[i]->impl.work;
            elapsed += list[i]->impl.elapsed_ms;
            converged = converged && list[i]->impl.converged;
        }
        return make_enclosure(
            pienc::Enclosure{"intersection", value, exact, work, elapsed, converged}, out);
    });
}

const char* pienc_enclosure_method(const pienc_enclosure* e) {
    return e == nullptr ? nullptr : e->impl.method.c_str();
}

unsigned long pienc_enclosure_work(const pienc_enclosure* e) {
    return e == nullptr ? 0 : e->impl.work;
}

double pienc_enclosure_elapsed_ms(const pienc_enclosure* e) {
    return e == nullptr ? 0.0 : e->impl.elapsed_ms;
}

int pienc_enclosure_converged(const pienc_enclosure* e) {
    return e != nullptr && e->impl.converged ? 1 : 0;
}

pienc_status pienc_enclosure_endpoints(const pienc_enclosure* e, int exact, char** lo, char** hi) {
    if (e == nullptr || lo == nullptr || hi == nullptr) return fail(PIENC_EINVAL, "null pointer");
    return guarded([&] {
        const pienc::Interval& v = exact != 0 ? e->impl.exact : e->impl.value;
        char* l = dup_string(v.lo().frac_str());
        char* h;
        try {
            h = dup_string(v.hi().frac_str());
        } catch (...) {
            std::free(l);
            throw;
        }
        *lo = l;
        *hi = h;
        return PIENC_OK;
    });
}

pienc_status pienc_enclosure_decimal(const pienc_enclosure* e, int frac_digits, char** lo,
                                     char** hi, char** width) {
    if (e == nullptr || lo == nullptr || hi == nullptr || width == nullptr) {
        return fail(PIENC_EINVAL, "null pointer");
    }
    return guarded([&] {
        const pienc::Interval& v = e->impl.value;
        int f = frac_digits > 0 ? frac_digits : pienc::adaptive_frac_digits(v);
        std::string ls = pienc::decimal_floor_string(v.lo(), f);
        std::string hs = pienc::decimal_ceil_string(v.hi(), f);
        std::string ws = pienc::width_string(v);
        char* l = dup_string(ls);
        char* h = nullptr;
        char* w = nullptr;
        try {
            h = dup_string(hs);
            w = dup_string(ws);
        } catch (...) {
            std::free(l);
            std::free(h);
            throw;
        }
        *lo = l;
        *hi = h;
        *width = w;
        return PIENC_OK;
    });
}

pienc_status pienc_enclosure_digits(const pienc_enclosure* e, char** digits) {
    if (e == nullptr || digits == nullptr) return fail(PIENC_EINVAL, "null pointer");
    return guarded([&] {
        *digits = dup_string(pienc::guaranteed_digits(e->impl.value));
        return PIENC_OK;
    });
}

pienc_status pienc_series_prefix(unsigned long terms, char** text) {
    if (text == nullptr) return fail(PIENC_EINVAL, "null output pointer");
    return guarded([&] {
        *text = dup_string(pienc::arcsin_pi_prefix(terms));
        return PIENC_OK;
    });
}

pienc_status pienc_demo_report(int machine, char** text) {
    if (text == nullptr) return fail(PIENC_EINVAL, "null output pointer");
    return guarded([&] {
        *text = dup_string(machine != 0 ? pienc::demo_circularity_machine()
                                        : pienc::demo_circularity_text());
        return PIENC_OK;
    });
}

pienc_status pienc_verify(int inject_disjoint, char** report, int* all_passed) {
    if (report == nullptr || all_passed == nullptr) return fail(PIENC_EINVAL, "null pointer");
    return guarded([&] {
        pienc::VerifyResult r = pienc::run_verify(inject_disjoint != 0);
        *report = dup_string(r.report);
        *all_passed = r.all_passed ? 1 : 0;
        return PIENC_OK;
    });
}

int pienc_default_bits(const char* width) {
    if (width == nullptr) return -1;
    try {
        return pienc::bits_for_width(pienc::Rational::parse(width));
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return -1;
    }
}

long pienc_budget_for_width(const char* method, const char* width) {
    if (method == nullptr || width == nullptr) return -1;
    try {
        return static_cast<long>(
            pienc::budget_for_width(method, pienc::Rational::parse(width)));
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return -1;
    }
}

} // extern "C"
