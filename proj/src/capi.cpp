#include "conjforge.h"

#include <cstring>
#include <random>
#include <variant>

#include "budget.hpp"
#include "composite.hpp"
#include "digraph_reduction.hpp"
#include "errors.hpp"
#include "graph_reduction.hpp"
#include "orbitals.hpp"
#include "serialize.hpp"
#include "sn.hpp"
#include "suites.hpp"

using namespace conjforge;

// Tagged value behind the opaque handle.
struct cf_object {
  std::variant<FiniteStructure, qorder::PLAutomorphism, qorder::OrbitalDecomposition,
               circular::SnRegistry, circular::SnAutomorphism,
               layered::LayeredStructure, composite::CompositeAutomorphism,
               gendigraph::ForbiddenFamily, composite::CycleInvariant,
               composite::EsetCode>
      value;
};

namespace {

thread_local std::string g_last_error;

const char* type_name_of(const cf_object& o) {
  struct Visitor {
    const char* operator()(const FiniteStructure&) { return "structure"; }
    const char* operator()(const qorder::PLAutomorphism&) { return "plmap"; }
    const char* operator()(const qorder::OrbitalDecomposition&) { return "orbitals"; }
    const char* operator()(const circular::SnRegistry&) { return "registry"; }
    const char* operator()(const circular::SnAutomorphism&) { return "snmap"; }
    const char* operator()(const layered::LayeredStructure&) { return "layered"; }
    const char* operator()(const composite::CompositeAutomorphism&) { return "composite"; }
    const char* operator()(const gendigraph::ForbiddenFamily&) { return "family"; }
    const char* operator()(const composite::CycleInvariant&) { return "invariant"; }
    const char* operator()(const composite::EsetCode&) { return "eset"; }
  };
  return std::visit(Visitor{}, o.value);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs the body, mapping the error taxonomy onto status codes.
template <typename Fn>
cf_status guarded(Fn&& fn) {
  try {
    fn();
    return CF_OK;
  } catch (const InputError& e) {
    g_last_error = e.what();
    return CF_INPUT_ERROR;
  } catch (const BudgetError& e) {
    g_last_error = e.what();
    return CF_BUDGET_ERROR;
  } catch (const InvariantError& e) {
    g_last_error = e.what();
    return CF_INVARIANT_ERROR;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CF_INVARIANT_ERROR;
  }
}

template <typename T>
const T& expect(const cf_object* obj, const char* what) {
  if (obj == nullptr) throw InputError(std::string("null handle for ") + what);
  const T* v = std::get_if<T>(&obj->value);
  if (v == nullptr)
    throw InputError(std::string("expected a ") + what + " handle, got " +
                     type_name_of(*obj));
  return *v;
}

template <typename T>
void emit(cf_object** out, T value) {
  if (out == nullptr) throw InputError("null output handle");
  *out = new cf_object{std::move(value)};
}

}  // namespace

extern "C" {

const char* cf_last_error(void) { return g_last_error.c_str(); }

void cf_set_iteration_budget(long steps) { budget::set_iteration_limit(steps); }

cf_status cf_parse(const char* type_name, const char* json_text, cf_object** out) {
  return guarded([&] {
    if (type_name == nullptr || json_text == nullptr)
      throw InputError("null argument to cf_parse");
    io::json j = io::parse_text(json_text);
    std::string t = type_name;
    if (t == "structure") emit(out, io::structure_from_json(j));
    else if (t == "plmap") emit(out, io::plmap_from_json(j));
    else if (t == "registry") emit(out, io::registry_from_json(j));
    else if (t == "snmap") emit(out, io::snmap_from_json(j));
    else if (t == "layered") emit(out, io::layered_from_json(j));
    else if (t == "composite") emit(out, io::composite_from_json(j));
    else if (t == "family") emit(out, io::family_from_json(j));
    else throw InputError("unknown object type '" + t + "'");
  });
}

const char* cf_type(const cf_object* obj) {
  return obj == nullptr ? "null" : type_name_of(*obj);
}

cf_status cf_to_json(const cf_object* obj, char** out) {
  return guarded([&] {
    if (obj == nullptr || out == nullptr) throw InputError("null argument to cf_to_json");
    struct Visitor {
      io::json operator()(const FiniteStructure& v) { return io::structure_to_json(v); }
      io::json operator()(const qorder::PLAutomorphism& v) { return io::plmap_to_json(v); }
      io::json operator()(const qorder::OrbitalDecomposition& v) {
        return io::decomposition_to_json(v);
      }
      io::json operator()(const circular::SnRegistry& v) { return io::registry_to_json(v); }
      io::json operator()(const circular::SnAutomorphism& v) { return io::snmap_to_json(v); }
      io::json operator()(const layered::LayeredStructure& v) {
        return io::layered_to_json(v);
      }
      io::json operator()(const composite::CompositeAutomorphism& v) {
        return io::composite_to_json(v);
      }
      io::json operator()(const gendigraph::ForbiddenFamily& v) {
        return io::family_to_json(v);
      }
      io::json operator()(const composite::CycleInvariant& v) {
        return io::invariant_to_json(v);
      }
      io::json operator()(const composite::EsetCode& v) { return io::eset_to_json(v); }
    };
    *out = dup_string(io::dump(std::visit(Visitor{}, obj->value)));
  });
}

cf_status cf_to_dot(const cf_object* obj, char** out) {
  return guarded([&] {
    if (obj == nullptr || out == nullptr) throw InputError("null argument to cf_to_dot");
    if (const auto* s = std::get_if<FiniteStructure>(&obj->value))
      *out = dup_string(io::structure_to_dot(*s));
    else if (const auto* d = std::get_if<layered::LayeredStructure>(&obj->value))
      *out = dup_string(io::layered_to_dot(*d));
    else
      throw InputError(std::string("no DOT rendering for ") + type_name_of(*obj));
  });
}

void cf_string_free(char* s) { std::free(s); }

void cf_free(cf_object* obj) { delete obj; }

cf_status cf_build_phi_l(const cf_object* order, cf_object** out) {
  return guarded([&] {
    emit(out, qorder::build_phi_l(expect<FiniteStructure>(order, "structure")));
  });
}

cf_status cf_build_sn_reduction(const cf_object* order, int n, cf_object** out) {
  return guarded([&] {
    emit(out, circular::build_phi_l_sn(expect<FiniteStructure>(order, "structure"), n));
  });
}

cf_status cf_build_graph_reduction(const cf_object* graph, int n, int levels, int cap,
                                   cf_object** out) {
  return guarded([&] {
    emit(out, gengraph::build_reduction_graph(expect<FiniteStructure>(graph, "structure"),
                                              n, levels, cap));
  });
}

cf_status cf_build_tournament_reduction(const cf_object* tournament, int levels, int cap,
                                        cf_object** out) {
  return guarded([&] {
    emit(out, gendigraph::build_reduction_tournament(
                  expect<FiniteStructure>(tournament, "structure"), levels, cap));
  });
}

cf_status cf_build_infree_reduction(const cf_object* tournament, int n, int levels,
                                    int cap, cf_object** out) {
  return guarded([&] {
    emit(out, gendigraph::build_reduction_in_free(
                  expect<FiniteStructure>(tournament, "structure"), n, levels, cap));
  });
}

cf_status cf_build_forbidden_reduction(const cf_object* digraph, const cf_object* family,
                                       int levels, int cap, cf_object** out) {
  return guarded([&] {
    emit(out, gendigraph::build_reduction_forbidden(
                  expect<FiniteStructure>(digraph, "structure"),
                  expect<gendigraph::ForbiddenFamily>(family, "family"), levels, cap));
  });
}

cf_status cf_build_multipartite_reduction(const cf_object* tournament, int n, int levels,
                                          int cap, cf_object** out) {
  return guarded([&] {
    emit(out, gendigraph::build_reduction_multipartite(
                  expect<FiniteStructure>(tournament, "structure"), n, levels, cap));
  });
}

cf_status cf_build_hat(const cf_object* tournament, cf_object** out) {
  return guarded([&] {
    emit(out, gendigraph::build_hat(expect<FiniteStructure>(tournament, "structure")));
  });
}

cf_status cf_orbital_decomposition(const cf_object* plmap, cf_object** out) {
  return guarded([&] {
    emit(out, qorder::classify_orbitals(expect<qorder::PLAutomorphism>(plmap, "plmap")));
  });
}

cf_status cf_recover_order(const cf_object* plmap, cf_object** out) {
  return guarded([&] {
    emit(out, qorder::recover_order(expect<qorder::PLAutomorphism>(plmap, "plmap")));
  });
}

cf_status cf_recover_order_sn(const cf_object* snmap, cf_object** out) {
  return guarded([&] {
    emit(out, circular::recover_order_sn(expect<circular::SnAutomorphism>(snmap, "snmap")));
  });
}

cf_status cf_recover_base(const cf_object* layered_obj, cf_object** out) {
  return guarded([&] {
    const auto& d = expect<layered::LayeredStructure>(layered_obj, "layered");
    emit(out, layered::recover_base(d.structure(), d.phi()));
  });
}

cf_status cf_composite_invariant(const cf_object* comp, cf_object** out) {
  return guarded([&] {
    emit(out, composite::invariant(
                  expect<composite::CompositeAutomorphism>(comp, "composite")));
  });
}

cf_status cf_c3_invariant(const cf_object* comp, cf_object** out) {
  return guarded([&] {
    emit(out, composite::c3_composite_invariant(
                  expect<composite::CompositeAutomorphism>(comp, "composite")));
  });
}

cf_status cf_eset_encode(const cf_object* comp, cf_object** out) {
  return guarded([&] {
    emit(out, composite::encode_eset(
                  expect<composite::CompositeAutomorphism>(comp, "composite")));
  });
}

cf_status cf_pl_conjugacy(const cf_object* phi_obj, const cf_object* psi_obj,
                          uint64_t seed, int samples, int* verdict,
                          char** witness_json) {
  return guarded([&] {
    if (verdict == nullptr) throw InputError("null verdict pointer");
    const auto& phi = expect<qorder::PLAutomorphism>(phi_obj, "plmap");
    const auto& psi = expect<qorder::PLAutomorphism>(psi_obj, "plmap");
    auto dphi = qorder::classify_orbitals(phi);
    auto dpsi = qorder::classify_orbitals(psi);
    auto m = qorder::orbital_match(dphi, dpsi);
    *verdict = m.has_value() ? 1 : 0;
    if (!m || witness_json == nullptr) {
      if (witness_json != nullptr) *witness_json = nullptr;
      return;
    }
    qorder::Conjugator delta(phi, psi, *m);
    io::json matching = io::json::array();
    for (auto& [a, b] : m->pairs) matching.push_back({a, b});
    // Sampled graph of the conjugator: a seeded scatter across the line.
    std::mt19937_64 rng(seed);
    int count = samples > 0 ? samples : 100;
    io::json table = io::json::array();
    for (int i = 0; i < count; ++i) {
      long den = 1 + static_cast<long>(rng() % 40);
      long num = static_cast<long>(rng() % 2001) - 1000;
      Rat q(num, den);
      table.push_back({q.str(), delta(q).str()});
    }
    io::json j;
    j["conjugate"] = true;
    j["matching"] = std::move(matching);
    j["phi_regions"] = io::decomposition_to_json(dphi);
    j["psi_regions"] = io::decomposition_to_json(dpsi);
    j["samples"] = std::move(table);
    *witness_json = dup_string(io::dump(j));
  });
}

cf_status cf_composite_conjugacy(const cf_object* phi_obj, const cf_object* psi_obj,
                                 int* verdict, cf_object** witness) {
  return guarded([&] {
    if (verdict == nullptr) throw InputError("null verdict pointer");
    const auto& phi = expect<composite::CompositeAutomorphism>(phi_obj, "composite");
    const auto& psi = expect<composite::CompositeAutomorphism>(psi_obj, "composite");
    bool conj = composite::decide_conjugacy(phi, psi);
    *verdict = conj ? 1 : 0;
    if (witness != nullptr) {
      *witness = nullptr;
      if (conj) emit(witness, composite::build_conjugator_composite(phi, psi));
    }
  });
}

cf_status cf_run_suite(const char* suite, uint64_t seed, int samples, int* passed,
                       char** report_json) {
  return guarded([&] {
    if (suite == nullptr) throw InputError("null suite name");
    suites::Report rep = suites::run_suite(suite, seed, samples);
    if (passed != nullptr) *passed = rep.passed() ? 1 : 0;
    if (report_json != nullptr) *report_json = dup_string(io::dump(rep.to_json()));
  });
}

cf_status cf_suite_names(char** out) {
  return guarded([&] {
    if (out == nullptr) throw InputError("null output pointer");
    std::string names;
    for (const auto& n : suites::suite_names()) {
      names += n;
      names += '\n';
    }
    *out = dup_string(names);
  });
}

}  // extern "C"
