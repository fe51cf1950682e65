// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Every comparison is exact; the only tolerances are the wall-clock limits printed with each line.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "mfn/blocks/decomposition.hpp"
#include "mfn/blocks/idempotent.hpp"
#include "mfn/chars/character_table.hpp"
#include "mfn/chars/clifford.hpp"
#include "mfn/chars/dkernel.hpp"
#include "mfn/chars/linear_character.hpp"
#include "mfn/groups/checks.hpp"
#include "mfn/morita/cartan_permutation.hpp"
#include "mfn/morita/lemma_suite.hpp"
#include "mfn/morita/morita.hpp"

using namespace mfn;

namespace {

// Collects failures for one criterion; the first few are shown.
class Ledger {
 public:
  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (failures_.size() < 5) failures_.push_back(what);
    ++failed_;
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool passed() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream os;
    const auto& items = passed() ? notes_ : failures_;
    for (std::size_t i = 0; i < items.size(); ++i) os << (i ? "; " : "") << items[i];
    if (failed_ > failures_.size()) os << "; +" << (failed_ - failures_.size()) << " more";
    return os.str();
  }

 private:
  std::vector<std::string> failures_, notes_;
  std::size_t failed_ = 0;
};

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;
  std::function<void(Ledger&)> body;
};

bool run(const Criterion& c) {
  Ledger ledger;
  const auto start = std::chrono::steady_clock::now();
  try {
    c.body(ledger);
  } catch (const std::exception& e) {
    ledger.require(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream time;
  time.precision(3);
  time << std::fixed << seconds << " s, limit " << c.limit_seconds << " s";
  ledger.require(seconds < c.limit_seconds, "over time");
  std::cout << (ledger.passed() ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": " << c.name << " ("
            << ledger.summary() << (ledger.summary().empty() ? "" : "; ") << time.str() << ")" << std::endl;
  return ledger.passed();
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

void theorem_instances(Ledger& out) {
  const std::vector<std::pair<int, int>> cases{{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {5, 2}};
  std::ostringstream primes;
  for (auto [l, n] : cases) {
    const auto start = std::chrono::steady_clock::now();
    const auto inst = construct_theorem_instance(l, n);
    const double s = seconds_since(start);
    const std::string tag = "(" + std::to_string(l) + "," + std::to_string(n) + ")";
    const i64 p = inst.params.p;
    const i64 q = checked_pow(l, static_cast<unsigned>(n)) - 1;
    out.require(is_prime(p) && (p - 1) % q == 0 && !is_power_of(l, p - 1), tag + " prime fails re-validation");
    out.require(inst.result.mfn == n, tag + " mfn=" + std::to_string(inst.result.mfn));
    out.require(inst.matches(), tag + " " + inst.check.detail);
    out.require(s < 1.0, tag + " took over 1 s");
    primes << tag << "p=" << p << " ";
  }
  out.note("mfn = n for all 7 cases, " + primes.str().substr(0, primes.str().size() - 1));
}

void negative_control(Ledger& out) {
  const Construction c(make_params(2, 7, 1, 1));
  const auto theta = z_character(c, 1);
  const auto r = morita_frobenius_number(c, theta);
  out.require(theta.order() == 3, "theta does not have order 3");
  out.require(r.mfn == 1, "mfn=" + std::to_string(r.mfn));
  out.require(r.via_inverse_swap, "inverseSwap clause not used");
  out.note("p=7 t=(1,1) theta of order 3: mfn=1 via inverseSwap");
}

void fpstable(Ledger& out) {
  u64 cases = 0;
  for (int l : {2, 3})
    for (int p : {3, 5, 7}) {
      if (p == l) {
        out.note("l=p=3 skipped (needs p != l)");
        continue;
      }
      const Construction c(make_params(l, p, 1, 1, true));
      for (int t : {1, 2}) {
        const auto rep = fp_stable_characters(c, t);
        const std::string tag = "l=" + std::to_string(l) + " p=" + std::to_string(p) + " t=" + std::to_string(t);
        out.require(rep.check.passed, tag + " check failed");
        out.require(rep.stable.size() == static_cast<std::size_t>(checked_pow(l, static_cast<unsigned>(t))),
                    tag + " stable=" + std::to_string(rep.stable.size()));
        ++cases;
      }
    }
  out.note(std::to_string(cases) + " cases, stable count l^t each");
}

void commutator(Ledger& out) {
  for (int p : {5, 7}) {
    const Construction c(make_params(2, p, 1, 1, true));
    const auto r = verify_comm_relation(c);
    out.require(r.passed && r.counterexamples.empty(), "p=" + std::to_string(p) + " has counterexamples");
    out.note("p=" + std::to_string(p) + ": " + std::to_string(r.checked) + " checks");
  }
}

void outcome_passes(Ledger& out, const LemmaOutcome& o) {
  out.require(o.status == LemmaStatus::Pass, to_string(o.lemma) + " " + to_string(o.status) + " " + o.message);
  for (const auto& ch : o.checks) {
    out.require(ch.passed, ch.name + ": " + (ch.counterexamples.empty() ? ch.detail : ch.counterexamples.front()));
    out.note(ch.name + " " + std::to_string(ch.checked));
  }
}

void autos(Ledger& out) {
  outcome_passes(out, run_lemma(Lemma::Autos, make_params(2, 7, 1, 1)));
}

void dkernel(Ledger& out) {
  outcome_passes(out, run_lemma(Lemma::DKernel, make_params(2, 5, 1, 1, true)));
  const Construction c(make_params(2, 7, 1, 1));
  const auto tri = check_stabilizer_trichotomy(c);
  out.require(tri.passed, "trichotomy at p=7");
  out.require(tri.checked == 4095, "trichotomy covered " + std::to_string(tri.checked) + " nontrivial theta");
  const auto e = make_e_lprime_group(c);
  const auto table = irr_small_group(e);
  const auto dich = check_restriction_dichotomy(c, e, table);
  out.require(dich.passed, "restriction dichotomy at p=7");
  out.note("p=7 trichotomy " + std::to_string(tri.checked) + ", dichotomy over " + std::to_string(table.characters.size()) + " characters");
}

void idempotents(Ledger& out) {
  for (int p : {7, 29}) {
    const Construction c(make_params(2, p, 1, 2));
    const auto blocks = all_blocks(c);
    const auto rmap = block_reduction(c);
    const std::string tag = "p=" + std::to_string(p);
    const auto laws = check_idempotent_laws(c, blocks);
    const auto reduced = check_reduced_laws(c, blocks, rmap);
    i64 orbit_max = 1;
    for (const auto& b : blocks) orbit_max = std::max(orbit_max, static_cast<i64>(morita_frobenius_number(c, b.phi).orbit.size()));
    const auto twist = check_twist_permutation(c, blocks, rmap, std::max<i64>(orbit_max, rmap.field_degree()));
    out.require(laws.passed, tag + " idempotent laws");
    out.require(reduced.passed, tag + " reduced laws");
    out.require(twist.passed, tag + " twist");
    out.note(tag + ": " + std::to_string(blocks.size()) + " blocks, " + std::to_string(laws.checked + reduced.checked + twist.checked) + " checks");
  }
}

void character_theory(Ledger& out) {
  const Construction c7(make_params(2, 7, 1, 1));
  const auto e = make_e_lprime_group(c7);
  const auto et = irr_small_group(e);
  out.require(check_first_orthogonality(et.characters).passed, "E_l' p=7 first orthogonality");
  out.require(check_second_orthogonality(et.characters).passed, "E_l' p=7 second orthogonality");
  out.require(sum_of_squared_degrees(et.characters) == static_cast<long>(e.order()), "E_l' p=7 degree sum");

  const auto setup7 = build_clifford_setup(c7);
  mpz_class total = 0;
  for (const auto& o : setup7.orbits)
    for (std::size_t i = 0; i < o.constituents.size(); ++i) total += o.induced_degree(i) * o.induced_degree(i);
  out.require(total == c7.order_G_lprime(), "Clifford degrees at p=7 do not sum to |G_l'|");

  const Construction c5(make_params(2, 5, 1, 1, true));
  const auto g = make_g_lprime_group(c5);
  const auto gt = irr_small_group(g);
  out.require(check_first_orthogonality(gt.characters).passed, "G_l' p=5 first orthogonality");
  out.require(check_second_orthogonality(gt.characters).passed, "G_l' p=5 second orthogonality");
  out.require(sum_of_squared_degrees(gt.characters) == static_cast<long>(g.order()), "G_l' p=5 degree sum");
  const auto clifford = irr_G_via_clifford(build_clifford_setup(c5), g, gt.classes);
  out.require(check_first_orthogonality(clifford).passed, "Clifford table p=5 first orthogonality");
  out.require(clifford == gt.characters, "Clifford and generic tables differ at p=5");
  out.note("E_l'(7): " + std::to_string(et.characters.size()) + " chars; G_l'(7) via Clifford: " +
           std::to_string(setup7.character_count()) + " chars; G_l'(5): " + std::to_string(gt.characters.size()) +
           " chars, both routes equal");
}

void rank_identities(Ledger& out) {
  const Construction c5(make_params(2, 5, 1, 1, true));
  const auto d5 = decomposition_via_clifford(build_clifford_setup(c5), z_character(c5, 0));
  const auto r5 = block_rank(c5, &d5);
  out.require(r5.consistent(), "p=5 rank " + r5.computed->get_str() + " vs " + r5.closed_form.get_str());

  const Construction c7(make_params(2, 7, 1, 1));
  const auto setup = build_clifford_setup(c7);
  std::vector<DecompositionData> data;
  for (u64 k = 0; k < c7.order_Z_lprime(); ++k) {
    data.push_back(decomposition_via_clifford(setup, z_character(c7, static_cast<i64>(k))));
    const auto r = block_rank(c7, &data.back());
    out.require(r.consistent(), "p=7 block " + std::to_string(k) + " rank " + r.computed->get_str());
  }

  u64 samples = 0;
  const auto bound = [&](const DecompositionData& a, const DecompositionData& b, const std::string& tag) {
    const auto rep = rank_bound_check(a.ordinary_degrees, b.ordinary_degrees, 1000, 7);
    out.require(rep.passed(), tag + " violations=" + std::to_string(rep.violations));
    samples += rep.samples;
  };
  bound(d5, d5, "p=5 B0");
  for (std::size_t a = 0; a < data.size(); ++a)
    for (std::size_t b = a; b < data.size(); ++b)
      if (data[a].k() == data[b].k()) bound(data[a], data[b], "p=7 B" + std::to_string(a) + "/B" + std::to_string(b));
  out.note("ranks " + r5.closed_form.get_str() + " (p=5), " + block_rank_closed_form(c7).get_str() + " (p=7); " +
           std::to_string(samples) + " bijections, 0 violations");
}

void cartan(Ledger& out) {
  const Construction c5(make_params(2, 5, 1, 1, true));
  const auto phi = z_character(c5, 0);
  const auto via_clifford = decomposition_via_clifford(build_clifford_setup(c5), phi);
  const auto g = make_g_lprime_group(c5);
  const auto e = make_e_lprime_group(c5);
  const auto via_tables = decomposition_via_tables(c5, g, irr_small_group(g), e, irr_small_group(e), phi);
  for (const auto* d : {&via_clifford, &via_tables}) {
    const auto ch = check_cartan(*d, 2);
    out.require(ch.passed, ch.name + ": " + (ch.counterexamples.empty() ? "" : ch.counterexamples.front()));
  }
  out.require(equal_up_to_permutation(via_clifford.cartan, via_tables.cartan), "routes give different Cartan matrices");
  out.note("p=5 " + check_cartan(via_clifford, 2).detail);

  const Construction c7(make_params(2, 7, 1, 1));
  const auto setup = build_clifford_setup(c7);
  for (u64 k = 1; k < c7.order_Z_lprime(); ++k) {
    const auto theta = z_character(c7, static_cast<i64>(k));
    const auto a = decomposition_via_clifford(setup, theta);
    const auto b = decomposition_via_clifford(setup, inverse(theta));
    out.require(check_cartan(a, 2).passed, "p=7 block " + std::to_string(k));
    out.require(equal_up_to_permutation(a.cartan, b.cartan), "p=7 Cartan of phi and its inverse differ");
    const auto v = morita_equivalent(build_idempotent(c7, theta), build_idempotent(c7, inverse(theta)));
    const auto ia = invariants_of(a), ib = invariants_of(b);
    const auto checked = morita_equivalent(build_idempotent(c7, theta), build_idempotent(c7, inverse(theta)), &ia, &ib);
    out.require(v.equivalent && checked.consistent(), "p=7 verdict inconsistent with invariants");
  }
  out.note("p=7 Cartan(phi) and Cartan(phi^-1) agree up to permutation");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "theorem instances", 7.0, theorem_instances},
      {2, "negative control", 1.0, negative_control},
      {3, "Fp-stable characters", 60.0, fpstable},
      {4, "commutator relation", 120.0, commutator},
      {5, "automorphisms", 300.0, autos},
      {6, "D-kernel", 600.0, dkernel},
      {7, "idempotents and twist", 120.0, idempotents},
      {8, "character tables", 300.0, character_theory},
      {9, "rank identities", 120.0, rank_identities},
      {10, "Cartan properties", 300.0, cartan},
  };
  int failed = 0;
  for (const auto& c : criteria)
    if (!run(c)) ++failed;
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
