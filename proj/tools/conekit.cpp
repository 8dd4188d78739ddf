// conekit: exact asymptotic-cone and building computations from the command
// line. Exact values are primary; floats are labeled approximations.
//
// Exit codes: 0 success, 2 parse/format error, 3 domain error.

#include "conekit/conekit.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace conekit;

bool g_json = false;

std::string approx8(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.8f", v);
  return buf;
}

void emit(const json& j, const std::string& text) {
  if (g_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

void run_val(const std::string& expr) {
  Valuation v = parse_hahn(expr).valuation();
  std::ostringstream os;
  os << v << "\n";
  emit({{"valuation", v.is_infinite() ? "inf" : v.value().get_str()},
        {"infinite", v.is_infinite()}},
       os.str());
}

void run_cmp(const std::string& a, const std::string& b) {
  Ordering o = compare(parse_hahn(a), parse_hahn(b));
  const char* name = o == Ordering::Less ? "LESS" : o == Ordering::Equal ? "EQUAL" : "GREATER";
  emit({{"order", name}}, std::string(name) + "\n");
}

void run_dist(const std::string& file_a, const std::string& file_b) {
  ConePoint p(load_sym_matrix(file_a));
  ConePoint q(load_sym_matrix(file_b));
  DistanceSq d = distance_sq(p, q);
  std::ostringstream os;
  os << "d2 = " << d.value.get_str() << "\n"
     << "d ≈ " << approx8(d.approx_distance()) << "\n";
  emit({{"d2", d.value.get_str()}, {"d_approx", d.approx_distance()}}, os.str());
}

void run_ldl(const std::string& file) {
  MatrixK a = load_sym_matrix(file);
  LdltDecomposition res = ldlt(a);
  json jl = json::array(), jd = json::array();
  std::ostringstream os;
  os << "L =\n";
  for (Eigen::Index i = 0; i < res.L.rows(); ++i) {
    json row = json::array();
    os << "  [";
    for (Eigen::Index j = 0; j < res.L.cols(); ++j) {
      row.push_back(to_text(res.L(i, j)));
      os << (j ? ", " : "") << to_text(res.L(i, j));
    }
    os << "]\n";
    jl.push_back(row);
  }
  os << "D = [";
  for (Eigen::Index i = 0; i < res.D.size(); ++i) {
    jd.push_back(to_text(res.D(i)));
    os << (i ? ", " : "") << to_text(res.D(i));
  }
  os << "]\n";
  os << "positive definite: " << (res.positive_definite ? "yes" : "no") << "\n";
  emit({{"L", jl}, {"D", jd}, {"positive_definite", res.positive_definite}}, os.str());
}

void run_det(const std::string& file) {
  HahnNumber d = determinant(load_sym_matrix(file));
  emit({{"det", to_text(d)}}, to_text(d) + "\n");
}

void run_roots(const std::string& file) {
  PolynomialK p = polynomial_from_json(load_json_file(file));
  RootValuations rv = root_valuations(p);
  json fin = json::array();
  std::ostringstream os;
  for (const auto& v : rv.finite) {
    fin.push_back(v.get_str());
    os << v.get_str() << "\n";
  }
  for (Eigen::Index i = 0; i < rv.infinite_count; ++i) os << "inf\n";
  emit({{"finite", fin}, {"infinite_count", rv.infinite_count}}, os.str());
}

void run_cone_point(const std::string& file) {
  ConePoint p = point_from_sequence(load_seq_spec(file));
  json j = sym_matrix_to_json(p.rep());
  emit(j, j.dump(2) + "\n");
}

void run_rq(const std::string& file_a, const std::string& file_b, const std::string& q) {
  EventualTruth t = relation_Rq(load_seq_spec(file_a), load_seq_spec(file_b), parse_rational(q));
  emit({{"relation", to_string(t)}}, std::string(to_string(t)) + "\n");
}

void run_expcheck(const std::string& file) {
  auto entries = exp_entries_from_json(load_json_file(file));
  ExpCheckResult res = exp_condition_check(entries);
  std::ostringstream os;
  if (res.admissible)
    os << "admissible, k = " << res.k << "\n";
  else
    os << "inadmissible\n";
  emit({{"admissible", res.admissible}, {"k", res.admissible ? res.k : 0}}, os.str());
}

void run_flag(const std::string& frame_file, const std::string& direction) {
  Frame f = frame_from_json(load_json_file(frame_file));
  Flag fl = flag_at_infinity(f, parse_rational_list(direction));
  json j = flag_to_json(fl);
  emit(j, j.dump(2) + "\n");
}

void run_frame(const std::string& flag_file_1, const std::string& flag_file_2) {
  Frame f = common_frame(load_flag(flag_file_1), load_flag(flag_file_2));
  json j = frame_to_json(f);
  emit(j, j.dump(2) + "\n");
}

void run_coxeter(int rank, bool adjacency) {
  CoxeterComplex cx = CoxeterComplex::enumerate(rank);
  std::ostringstream os;
  os << "chambers: " << cx.chamber_count() << "\n";
  json faces = json::array();
  for (int k = 1; k <= rank; ++k) {
    os << "faces with " << k << " subsets: " << cx.face_count(k) << "\n";
    faces.push_back(cx.face_count(k));
  }
  bool thin = true;
  if (rank >= 2)
    for (const auto& [wall, count] : cx.wall_chamber_counts())
      if (count != 2) thin = false;
  os << "thin: " << (thin ? "yes" : "no") << "\n";
  json j{{"chambers", cx.chamber_count()}, {"face_counts", faces}, {"thin", thin}};
  if (adjacency) {
    std::vector<int> degrees;
    const auto& ch = cx.chambers();
    for (std::size_t i = 0; i < ch.size(); ++i) {
      int deg = 0;
      for (std::size_t k = 0; k < ch.size(); ++k)
        if (i != k && CoxeterComplex::adjacent(ch[i], ch[k])) ++deg;
      degrees.push_back(deg);
    }
    bool regular = std::all_of(degrees.begin(), degrees.end(),
                               [&](int d) { return d == rank; });
    os << "every chamber has " << rank << " neighbours: " << (regular ? "yes" : "no") << "\n";
    j["adjacency_regular"] = regular;
  }
  emit(j, os.str());
}

void run_diamond(const std::string& xs, const std::string& ys, const std::string& member) {
  VectorQ x = to_vector_q(parse_rational_list(xs));
  VectorQ y = to_vector_q(parse_rational_list(ys));
  Diamond d(x, y);
  std::ostringstream os;
  json verts = json::array();
  for (const VectorQ& v : d.vertices()) {
    json jv = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      jv.push_back(v(i).get_str());
      os << (i ? "," : "") << v(i).get_str();
    }
    os << "\n";
    verts.push_back(jv);
  }
  json j{{"vertices", verts}};
  if (!member.empty()) {
    bool in = d.member(to_vector_q(parse_rational_list(member)));
    os << "member: " << (in ? "yes" : "no") << "\n";
    j["member"] = in;
  }
  emit(j, os.str());
}

void run_sector_check(const std::string& xs, const std::string& chamber_text,
                      const std::string& vs, const std::string& radius, int samples,
                      unsigned seed) {
  VectorQ x = to_vector_q(parse_rational_list(xs));
  std::vector<int> chamber;
  for (const Rational& r : parse_rational_list(chamber_text)) {
    if (r.get_den() != 1) throw ParseError("sector-check: chamber entries must be integers");
    chamber.push_back(static_cast<int>(r.get_num().get_si()));
  }
  Direction v(to_vector_q(parse_rational_list(vs)));
  SectorRecoveryReport report =
      sector_recovery_check(x, chamber, v, parse_rational(radius), samples, seed);
  emit({{"interior_samples", report.interior_samples},
        {"interior_covered", report.interior_covered},
        {"exterior_samples", report.exterior_samples},
        {"exterior_rejected", report.exterior_rejected},
        {"k_cap", report.k_cap},
        {"passed", report.passed}},
       report.summary() + "\n");
}

void run_finite_building(int q, int m, bool check, int b3_pairs) {
  FiniteFlagComplex fc = FiniteFlagComplex::build(q, m);
  std::ostringstream os;
  os << "chambers: " << fc.chamber_count() << "\n"
     << "apartments: " << fc.apartment_count() << "\n";
  json j{{"q", q}, {"m", m}, {"chambers", fc.chamber_count()},
         {"apartments", fc.apartment_count()}};
  if (check) {
    json axioms = json::array();
    for (const auto& res : fc.check_axioms(b3_pairs)) {
      os << res.axiom << ": " << (res.holds ? "holds" : "FAILS (" + res.counterexample + ")")
         << "\n";
      axioms.push_back({{"axiom", res.axiom},
                        {"holds", res.holds},
                        {"counterexample", res.counterexample}});
    }
    j["axioms"] = axioms;
  }
  emit(j, os.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact asymptotic-cone and building computations"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", g_json, "machine-readable JSON output");

  std::string expr, expr2, file_a, file_b, qarg;
  std::string frame_file, direction, xs, ys, vs, member, chamber_text, radius = "2";
  int rank = 2, fq = 2, fm = 3, samples = 100, b3_pairs = 0;
  unsigned seed = 0;
  bool adjacency = false, check_axioms = false;

  auto* val = app.add_subcommand("val", "valuation of a field element");
  val->add_option("expr", expr)->required();
  val->callback([&] { run_val(expr); });

  auto* cmp = app.add_subcommand("cmp", "compare two field elements");
  cmp->add_option("a", expr)->required();
  cmp->add_option("b", expr2)->required();
  cmp->callback([&] { run_cmp(expr, expr2); });

  auto* dist = app.add_subcommand("dist", "squared cone distance between two points");
  dist->add_option("A", file_a)->required();
  dist->add_option("B", file_b)->required();
  dist->callback([&] { run_dist(file_a, file_b); });

  auto* ldl = app.add_subcommand("ldl", "exact LDL^T decomposition");
  ldl->add_option("A", file_a)->required();
  ldl->callback([&] { run_ldl(file_a); });

  auto* det = app.add_subcommand("det", "exact determinant");
  det->add_option("A", file_a)->required();
  det->callback([&] { run_det(file_a); });

  auto* roots = app.add_subcommand("roots", "root valuations via the Newton polygon");
  roots->add_option("P", file_a)->required();
  roots->callback([&] { run_roots(file_a); });

  auto* cone = app.add_subcommand("cone-point", "cone point of a symbolic sequence");
  cone->add_option("S", file_a)->required();
  cone->callback([&] { run_cone_point(file_a); });

  auto* rq = app.add_subcommand("rq", "decide the relation R_q for two sequences");
  rq->add_option("A", file_a)->required();
  rq->add_option("B", file_b)->required();
  rq->add_option("q", qarg)->required();
  rq->callback([&] { run_rq(file_a, file_b, qarg); });

  auto* expc = app.add_subcommand("expcheck", "growth condition check with witness");
  expc->add_option("S", file_a)->required();
  expc->callback([&] { run_expcheck(file_a); });

  auto* flag = app.add_subcommand("flag", "flag at infinity of a frame and direction");
  flag->add_option("--frame", frame_file)->required();
  flag->add_option("--direction", direction)->required();
  flag->callback([&] { run_flag(frame_file, direction); });

  auto* frame = app.add_subcommand("frame", "common frame adapted to two flags");
  frame->add_option("F1", file_a)->required();
  frame->add_option("F2", file_b)->required();
  frame->callback([&] { run_frame(file_a, file_b); });

  auto* cox = app.add_subcommand("coxeter", "enumerate an A_n Coxeter complex");
  cox->add_option("--rank", rank)->required();
  cox->add_flag("--adjacency", adjacency);
  cox->callback([&] { run_coxeter(rank, adjacency); });

  auto* dia = app.add_subcommand("diamond", "diamond polytope in the standard apartment");
  dia->add_option("--x", xs)->required();
  dia->add_option("--y", ys)->required();
  dia->add_option("--member", member);
  dia->callback([&] { run_diamond(xs, ys, member); });

  auto* sec = app.add_subcommand("sector-check", "sector reconstruction via diamonds");
  sec->add_option("--x", xs)->required();
  sec->add_option("--chamber", chamber_text)->required();
  sec->add_option("--v", vs)->required();
  sec->add_option("--radius", radius);
  sec->add_option("--samples", samples);
  sec->add_option("--seed", seed);
  sec->callback([&] { run_sector_check(xs, chamber_text, vs, radius, samples, seed); });

  auto* fin = app.add_subcommand("finite-building", "finite flag complex with axiom checks");
  fin->add_option("--q", fq)->required();
  fin->add_option("--m", fm)->required();
  fin->add_flag("--check-axioms", check_axioms);
  fin->add_option("--b3-pairs", b3_pairs, "cap on B3 apartment pairs (0 = all)");
  fin->callback([&] { run_finite_building(fq, fm, check_axioms, b3_pairs); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
