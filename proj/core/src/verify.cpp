#include "stdual/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <sstream>

#include "stdual/errors.hpp"

namespace stdual {

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "fail";
    case ClaimStatus::not_applicable: return "not-applicable";
  }
  return "?";
}

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids{
      "involution",
      "commute-res",
      "commute-ind",
      "dual-of-trivial-is-sign",
      "sign-irreducible-up-to-sign",
      "steinberg-equals-D-of-trivial",
      "steinberg-restriction",
      "ellipticity-equivalence",
      "corank-one-dichotomy",
      "euler-vanishing",
      "contragredient-commutation",
  };
  return ids;
}

const ClaimRecord& DualityReport::claim(const std::string& id) const {
  for (const auto& c : claims)
    if (c.id == id) return c;
  throw InvalidInput("unknown claim id '" + id + "'");
}

bool DualityReport::all_pass() const {
  return std::none_of(claims.begin(), claims.end(), [](const ClaimRecord& c) { return c.status == ClaimStatus::fail; });
}

bool ClaimMatrix::all_pass() const {
  for (const auto& row : status)
    for (auto s : row)
      if (s == ClaimStatus::fail) return false;
  return true;
}

namespace {

struct Outcome {
  ClaimStatus status;
  std::string witness;
};

Outcome pass(std::string w) { return {ClaimStatus::pass, std::move(w)}; }
Outcome fail(std::string w) { return {ClaimStatus::fail, std::move(w)}; }
Outcome not_applicable(std::string w) { return {ClaimStatus::not_applicable, std::move(w)}; }

std::string levi_name(const Scenario& s, std::size_t l) {
  return "L" + std::to_string(l) + " (dim A = " + std::to_string(s.dim_a(l)) + ")";
}

std::string char_name(const IsotypicFamily& fam, std::size_t i) {
  return "chi" + std::to_string(fam.members[i]) + " = " + fam.at(i).str();
}

class Checker {
 public:
  Checker(const Scenario& s, LeviFamily family) : s_(s), e_(s, family) {}

  Outcome involution() {
    const auto& fam = e_.top().family;
    for (std::size_t j = 0; j < fam.size(); ++j) {
      auto dd = e_.dual(e_.dual(fam.at(j)));
      if (dd != fam.at(j)) return fail("D(D(" + char_name(fam, j) + ")) = " + dd.str());
    }
    return pass("D^2 = I on the " + std::to_string(fam.size()) + "-dimensional isotypic span");
  }

  Outcome commute_res() {
    const auto& fam = e_.top().family;
    const std::size_t g = e_.top_index();
    for (std::size_t l : e_.family()) {
      Subgroup h = e_.inclusion(l, g);
      for (std::size_t j = 0; j < fam.size(); ++j) {
        auto lhs = restrict(e_.dual(fam.at(j)), h);
        auto rhs = e_.dual(l, restrict(fam.at(j), h));
        if (lhs != rhs)
          return fail(levi_name(s_, l) + ", " + char_name(fam, j) + ": Res D = " + lhs.str() + ", D^L Res = " + rhs.str());
      }
    }
    return pass("checked on " + std::to_string(e_.family().size()) + " Levis");
  }

  Outcome commute_ind() {
    const std::size_t g = e_.top_index();
    for (std::size_t l : e_.family()) {
      Subgroup h = e_.inclusion(l, g);
      const auto& fam = e_.level(l).family;
      for (std::size_t j = 0; j < fam.size(); ++j) {
        auto lhs = induce(e_.dual(l, fam.at(j)), h);
        auto rhs = e_.dual(induce(fam.at(j), h));
        if (lhs != rhs)
          return fail(levi_name(s_, l) + ", " + char_name(fam, j) + ": Ind D^L = " + lhs.str() + ", D Ind = " + rhs.str());
      }
    }
    return pass("checked on " + std::to_string(e_.family().size()) + " Levis");
  }

  Outcome dual_of_trivial() {
    if (!s_.extension.chi_trivial()) return not_applicable("central character is nontrivial; the sign map is not in the isotypic span");
    auto d = e_.dual(e_.base(e_.top_index()));
    auto xi = sign_map(s_);
    std::string rel;
    if (d == xi) rel = "D(base) = xi";
    else if (d == -xi) rel = "D(base) = -xi";
    else return fail("D(base) = " + d.str() + ", xi = " + xi.str());
    const auto& fam = e_.top().family;
    for (std::size_t i = 0; i < fam.size(); ++i) {
      if (d == fam.at(i)) return pass(rel + " = 1 * [" + char_name(fam, i) + "], sign = 1");
      if (d == -fam.at(i)) return pass(rel + " = -1 * [" + char_name(fam, i) + "], sign = -1");
    }
    return pass(rel);
  }

  Outcome sign_irreducible() {
    if (!s_.extension.chi_trivial()) return not_applicable("central character is nontrivial; the sign map is not in the isotypic span");
    auto xi = sign_map(s_);
    const auto& fam = e_.top().family;
    int match = -1;
    Cyclotomic sign;
    for (std::size_t i = 0; i < fam.size(); ++i) {
      auto ip = inner_product(xi, fam.at(i));
      if (ip.is_zero()) continue;
      if ((ip != Cyclotomic(1) && ip != Cyclotomic(-1)) || match >= 0)
        return fail("<xi, " + char_name(fam, i) + "> = " + ip.str());
      match = static_cast<int>(i);
      sign = ip;
    }
    if (match < 0) return fail("xi is orthogonal to every isotypic irreducible");
    if (xi != sign * fam.at(static_cast<std::size_t>(match)))
      return fail("xi = " + xi.str() + " is not a signed irreducible");
    return pass(char_name(fam, static_cast<std::size_t>(match)) + ", sign = " + sign.str());
  }

  Outcome steinberg_equals_dual() {
    auto st = e_.steinberg();
    auto d = e_.dual(e_.base(e_.top_index()));
    if (st == d) return pass("St = " + st.str());
    return fail("St = " + st.str() + ", D(base) = " + d.str());
  }

  Outcome steinberg_restriction() {
    auto st = e_.steinberg();
    const std::size_t g = e_.top_index();
    for (std::size_t l : e_.family()) {
      auto lhs = e_.project(l, restrict(st, e_.inclusion(l, g)));
      auto rhs = e_.steinberg(l);
      if (lhs != rhs) return fail(levi_name(s_, l) + ": projected Res St = " + lhs.str() + ", St^L = " + rhs.str());
    }
    return pass("checked on " + std::to_string(e_.family().size()) + " Levis");
  }

  Outcome ellipticity() {
    auto st = e_.steinberg();
    const bool elliptic_group = regular_set(s_).elliptic;
    const bool elliptic_st = is_elliptic_character(s_, st);
    std::string w = std::string("St elliptic: ") + (elliptic_st ? "yes" : "no") +
                    ", regular set nonempty: " + (elliptic_group ? "yes" : "no");
    if (elliptic_st != elliptic_group) return fail(w);
    if (!s_.extension.chi_trivial()) return pass(w + "; regular-set sign comparison skipped for nontrivial chi");
    // xi and the base character agree up to one sign over the regular set.
    auto xi = sign_map(s_);
    auto base = e_.base(e_.top_index());
    std::optional<Cyclotomic> sign;
    for (int t : s_.extension.preimage(regular_set(s_).elements)) {
      if (base(t).is_zero()) return fail(w + "; base vanishes at regular " + s_.extension.total->label(t));
      Cyclotomic ratio = xi(t);
      if (base(t) == Cyclotomic(-1)) ratio = -ratio;
      else if (base(t) != Cyclotomic(1)) return fail(w + "; base(" + s_.extension.total->label(t) + ") = " + base(t).str());
      if (sign && *sign != ratio) return fail(w + "; xi/base changes sign over the regular set");
      sign = ratio;
    }
    return pass(w + (sign ? "; xi = " + sign->str() + " * base over the regular set" : ""));
  }

  Outcome corank_one() {
    const std::size_t corank = s_.levi_m.dim_A() - s_.lattice.back().dim_A();
    if (s_.r_group->order() != 2 || corank != 1) return pass("hypothesis not met (|R| = " + std::to_string(s_.r_group->order()) + ", corank " + std::to_string(corank) + ")");
    const auto& fam = e_.top().family;
    if (fam.size() != 2) return fail(std::to_string(fam.size()) + " isotypic irreducibles");
    for (std::size_t i = 0; i < 2; ++i)
      if (!is_elliptic_character(s_, fam.at(i))) return fail(char_name(fam, i) + " is not elliptic");
    return pass("two irreducibles, both elliptic");
  }

  Outcome euler() {
    std::ostringstream w;
    bool ok = true;
    for (std::size_t k : e_.family()) {
      const long sum = e_.euler(k);
      const long expected = k == e_.top_index() ? 1 : 0;
      if (k == e_.top_index()) continue;
      w << (w.tellp() > 0 ? ", " : "") << "L" << k << ": " << sum;
      if (sum != expected) ok = false;
    }
    std::string text = w.str().empty() ? "no Levi other than G" : w.str();
    return ok ? pass(text) : fail(text);
  }

  Outcome contragredient_commutation() {
    const auto& fam = e_.top().family;
    for (std::size_t j = 0; j < fam.size(); ++j) {
      auto lhs = contragredient(e_.dual(fam.at(j)));
      auto rhs = e_.dual(contragredient(fam.at(j)));
      if (lhs != rhs) return fail(char_name(fam, j) + ": E D = " + lhs.str() + ", D E = " + rhs.str());
    }
    return pass("checked on " + std::to_string(fam.size()) + " irreducibles");
  }

  const DualityEngine& engine() const { return e_; }

 private:
  const Scenario& s_;
  DualityEngine e_;
};

Outcome guarded(const std::function<Outcome()>& f) {
  try {
    return f();
  } catch (const ConfigurationError& e) {
    return not_applicable(e.what());
  } catch (const Error& e) {
    return fail(e.what());
  }
}

}  // namespace

DualityReport verify(const Scenario& s, LeviFamily family) {
  DualityReport r;
  r.scenario = s.name();
  r.family = family;
  Checker c(s, family);
  r.levi_family = c.engine().family();
  const std::vector<std::function<Outcome()>> checks{
      [&] { return c.involution(); },
      [&] { return c.commute_res(); },
      [&] { return c.commute_ind(); },
      [&] { return c.dual_of_trivial(); },
      [&] { return c.sign_irreducible(); },
      [&] { return c.steinberg_equals_dual(); },
      [&] { return c.steinberg_restriction(); },
      [&] { return c.ellipticity(); },
      [&] { return c.corank_one(); },
      [&] { return c.euler(); },
      [&] { return c.contragredient_commutation(); },
  };
  for (std::size_t i = 0; i < checks.size(); ++i) {
    auto o = guarded(checks[i]);
    r.claims.push_back(ClaimRecord{claim_ids()[i], o.status, std::move(o.witness)});
  }
  return r;
}

DualityReport verify(const Scenario& s) { return verify(s, s.default_family()); }

ClaimMatrix claim_matrix(const std::vector<DualityReport>& reports) {
  ClaimMatrix m;
  if (reports.empty()) return m;
  m.claims = claim_ids();
  for (const auto& r : reports) m.scenarios.push_back(r.scenario);
  for (const auto& id : m.claims) {
    std::vector<ClaimStatus> row;
    for (const auto& r : reports) row.push_back(r.claim(id).status);
    m.status.push_back(std::move(row));
  }
  return m;
}

std::vector<DualityReport> verify_all(const std::vector<Scenario>& scenarios, std::optional<LeviFamily> family) {
  std::vector<std::future<DualityReport>> jobs;
  for (const auto& s : scenarios)
    jobs.push_back(std::async(std::launch::async, [&s, family] { return verify(s, family.value_or(s.default_family())); }));
  std::vector<DualityReport> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace stdual
