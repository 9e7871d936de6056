#include "demwhit/demwhit.h"

#include "root_weyl.hpp"
#include "serialize.hpp"
#include "verify.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

struct dw_system {
  demwhit::WeylGroup group;
};

namespace {

thread_local std::string t_last_error;

dw_status fail(dw_status code, const std::string& message) {
  t_last_error = message;
  return code;
}

template <typename Fn>
dw_status guarded(Fn&& fn) {
  try {
    fn();
    t_last_error.clear();
    return DW_OK;
  } catch (const std::invalid_argument& e) {
    return fail(DW_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(DW_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(DW_ERR_DOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return fail(DW_ERR_NOMEM, "out of memory");
  } catch (const std::exception& e) {
    return fail(DW_ERR_INTERNAL, e.what());
  }
}

char* copy_out(const std::string& s) {
  char* buf = static_cast<char*>(std::malloc(s.size() + 1));
  if (!buf) throw std::bad_alloc();
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return buf;
}

demwhit::Weight weight_or_rho(const dw_system* sys, const long* weight, int weight_len) {
  if (!weight) return sys->group.rs().rho();
  if (weight_len != sys->group.rs().rank())
    throw std::invalid_argument("weight has " + std::to_string(weight_len) +
                                " coordinates but the rank is " +
                                std::to_string(sys->group.rs().rank()));
  return demwhit::Weight(weight, weight + weight_len);
}

demwhit::Rational parse_rational(const char* text) {
  std::string s(text);
  std::string num = s, den = "1";
  if (std::size_t slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  auto digits_ok = [](const std::string& part, bool sign_ok) {
    std::size_t k = (sign_ok && !part.empty() && part[0] == '-') ? 1 : 0;
    if (k == part.size()) return false;
    for (; k < part.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(part[k]))) return false;
    return true;
  };
  if (!digits_ok(num, true) || !digits_ok(den, false))
    throw std::invalid_argument(std::string("malformed rational '") + text +
                                "' (expected p or p/q)");
  demwhit::Int d(den);
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  return demwhit::Rational(demwhit::Int(num), d);
}

dw_status require(bool cond, const char* message) {
  return cond ? DW_OK : fail(DW_ERR_INVALID_ARGUMENT, message);
}

}  // namespace

extern "C" {

dw_status dw_system_create(char type, int rank, size_t bound, dw_system** out) {
  if (dw_status st = require(out != nullptr, "null output pointer"); st != DW_OK) return st;
  *out = nullptr;
  try {
    demwhit::RootSystem rs = demwhit::RootSystem::build(type, rank);
    demwhit::WeylGroup g = demwhit::WeylGroup::enumerate(rs, bound ? bound : 10000);
    *out = new dw_system{std::move(g)};
    t_last_error.clear();
    return DW_OK;
  } catch (const std::invalid_argument& e) {
    return fail(DW_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(DW_ERR_BOUND, e.what());
  } catch (const std::bad_alloc&) {
    return fail(DW_ERR_NOMEM, "out of memory");
  } catch (const std::exception& e) {
    return fail(DW_ERR_INTERNAL, e.what());
  }
}

void dw_system_free(dw_system* sys) { delete sys; }

int dw_system_rank(const dw_system* sys) { return sys ? sys->group.rs().rank() : 0; }

uint64_t dw_system_weyl_order(const dw_system* sys) {
  return sys ? static_cast<uint64_t>(sys->group.size()) : 0;
}

const char* dw_last_error(void) { return t_last_error.c_str(); }

dw_status dw_table(const dw_system* sys, const long* weight, int weight_len,
                   const char* basis, const int* word, int word_len, const char* v_at,
                   const char* format, char** out) {
  if (dw_status st = require(sys && out, "null system or output pointer"); st != DW_OK)
    return st;
  return guarded([&] {
    demwhit::TableOptions opt;
    opt.basis = basis ? basis : "X";
    if (word) {
      if (opt.basis != "Z")
        throw std::invalid_argument("a generator word is only meaningful for the Z basis");
      opt.word = std::vector<int>(word, word + word_len);
    }
    if (v_at) opt.v_at = parse_rational(v_at);
    demwhit::json doc =
        demwhit::table_document(sys->group, weight_or_rho(sys, weight, weight_len), opt);
    *out = copy_out(demwhit::render_document(doc, format ? format : "json"));
  });
}

dw_status dw_census(const dw_system* sys, const long* weight, int weight_len,
                    const char* format, char** out) {
  if (dw_status st = require(sys && out, "null system or output pointer"); st != DW_OK)
    return st;
  return guarded([&] {
    demwhit::json doc =
        demwhit::census_document(sys->group, weight_or_rho(sys, weight, weight_len));
    *out = copy_out(demwhit::render_document(doc, format ? format : "json"));
  });
}

dw_status dw_kl(const dw_system* sys, const char* format, char** out) {
  if (dw_status st = require(sys && out, "null system or output pointer"); st != DW_OK)
    return st;
  return guarded([&] {
    *out = copy_out(
        demwhit::render_document(demwhit::kl_document(sys->group), format ? format : "json"));
  });
}

dw_status dw_verify(const dw_system* sys, const char* suite, const long* weight,
                    int weight_len, uint64_t seed, int trials, char** report,
                    int* failures) {
  if (dw_status st = require(sys && suite && report && failures,
                             "null system, suite or output pointer");
      st != DW_OK)
    return st;
  return guarded([&] {
    if (trials <= 0) throw std::invalid_argument("trials must be positive");
    std::optional<demwhit::Weight> lam;
    if (weight) lam = weight_or_rho(sys, weight, weight_len);
    demwhit::VerifyResult res =
        demwhit::run_suite(sys->group, suite, lam ? &*lam : nullptr, seed, trials);
    std::string text;
    for (const std::string& line : res.lines) {
      text += line;
      text += '\n';
    }
    *report = copy_out(text);
    *failures = res.failures;
  });
}

dw_status dw_word_is_reduced(const dw_system* sys, const int* word, int word_len,
                             int* out) {
  if (dw_status st = require(sys && out && (word || word_len == 0),
                             "null system, word or output pointer");
      st != DW_OK)
    return st;
  return guarded([&] {
    std::vector<int> w(word, word + word_len);
    *out = sys->group.length(sys->group.from_word(w)) == word_len ? 1 : 0;
  });
}

void dw_string_free(char* s) { std::free(s); }

}  // extern "C"
