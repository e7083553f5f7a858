#include "mzv/acceptance.hpp"
#include "mzv/error.hpp"
#include "mzv/json_io.hpp"
#include "mzv/mahler.hpp"
#include "mzv/oracle.hpp"
#include "mzv/polyzeta.hpp"
#include "mzv/powersum.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace mzv;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  int digits = kDefaultDigits;
  double rel_tol = 1e-12;
  std::string format = "json";
};

std::vector<std::string> split(const std::string &s, char sep = ',') {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<long> longs(const std::string &s) {
  std::vector<long> out;
  for (auto &t : split(s)) {
    size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(t, &pos);
    } catch (const std::exception &) {
      throw UsageError("not an integer: " + t);
    }
    if (pos != t.size()) throw UsageError("not an integer: " + t);
    out.push_back(v);
  }
  return out;
}

std::vector<unsigned> naturals(const std::string &s) {
  std::vector<unsigned> out;
  for (long v : longs(s)) {
    if (v < 0) throw UsageError("expected non-negative integers: " + s);
    out.push_back(static_cast<unsigned>(v));
  }
  return out;
}

std::vector<Rational> rationals(const std::string &s) {
  std::vector<Rational> out;
  for (auto &t : split(s)) out.push_back(parse_rational(t));
  return out;
}

BigFloat real(const std::string &s) {
  try {
    return BigFloat(s);
  } catch (const std::exception &) {
    throw UsageError("not a real number: " + s);
  }
}

std::string slurp_if_file(const std::string &arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return arg;
  std::ifstream in(arg);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json load_json(const std::string &arg) {
  try {
    return json::parse(slurp_if_file(arg));
  } catch (const json::exception &e) {
    fail(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

/// Text, a JSON poly object, or a file holding either.
MPoly load_poly(const std::string &arg, unsigned nvars = 0) {
  std::string body = slurp_if_file(arg);
  auto first = body.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && body[first] == '{') return poly_from_json(load_json(body));
  while (!body.empty() && (body.back() == '\n' || body.back() == '\r')) body.pop_back();
  return parse_poly(body, nvars);
}

void emit(const Config &cfg, json out) {
  json j{{"schema", kSchemaVersion}};
  for (auto &[k, v] : out.items()) j[k] = v;
  std::cout << (cfg.format == "pretty" ? j.dump(2) : j.dump()) << "\n";
}

QuadratureSettings quad(const Config &cfg) {
  QuadratureSettings qs;
  qs.rel_tol = cfg.rel_tol;
  qs.precision = cfg.digits;
  return qs;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Special values of multiple zeta-functions with polynomial denominators"};
  app.require_subcommand(1);
  Config cfg;
  if (const char *env = std::getenv("MZV_PRECISION")) {
    try {
      cfg.digits = std::stoi(env);
    } catch (const std::exception &) {
      std::cerr << "MZV_PRECISION must be an integer\n";
      return 2;
    }
  }
  app.add_option("--digits", cfg.digits, "decimal digits of output precision (env MZV_PRECISION)");
  app.add_option("--format", cfg.format, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));

  // powersum
  std::string ps_d, ps_gamma, ps_N, ps_s, ps_theta;
  auto *ps = app.add_subcommand("powersum", "zeta_{n,d,gamma} at -N, or its directional limit with --theta");
  ps->add_option("--d", ps_d, "comma list d_1..d_n")->required();
  ps->add_option("--gamma", ps_gamma, "comma list of rationals, default all 1");
  auto *ps_N_opt = ps->add_option("--N", ps_N, "comma list N in N0^n; evaluates at -N");
  auto *ps_s_opt = ps->add_option("--s", ps_s, "comma list of integer arguments; the last must be <= 0");
  ps->add_option("--theta", ps_theta, "direction for the limit at -N");
  ps_N_opt->excludes(ps_s_opt);

  // directional
  std::string dl_d, dl_gamma, dl_N, dl_theta;
  auto *dl = app.add_subcommand("directional", "limit at -N approached along theta");
  dl->add_option("--d", dl_d)->required();
  dl->add_option("--gamma", dl_gamma);
  dl->add_option("--N", dl_N)->required();
  dl->add_option("--theta", dl_theta)->required();

  // mahler
  std::string mh_P, mh_Q = "1", mh_a;
  unsigned mh_N = 0;
  bool mh_Y = false;
  auto *mh = app.add_subcommand("mahler", "Z(P,Q;-N) for elliptic homogeneous P");
  mh->add_option("--P", mh_P, "polynomial text, JSON, or a file")->required();
  mh->add_option("--Q", mh_Q, "polynomial text, JSON, or a file");
  mh->add_option("--N", mh_N);
  mh->add_option("--rel-tol", cfg.rel_tol);
  mh->add_flag("--shifted", mh_Y, "evaluate Y(P,Q;a;-N) instead, with --a");
  mh->add_option("--a", mh_a, "comma list of rational shifts");

  // period
  std::string pd_P, pd_Q = "1", pd_u, pd_beta;
  unsigned pd_N = 0, pd_i = 1;
  auto *pd = app.add_subcommand("period", "one period integral K(alpha,u,beta,i)");
  pd->add_option("--P", pd_P)->required();
  pd->add_option("--Q", pd_Q);
  pd->add_option("--N", pd_N);
  pd->add_option("--u", pd_u, "JSON list of {k, gamma, count}, or a file")->required();
  pd->add_option("--beta", pd_beta)->required();
  pd->add_option("--i", pd_i)->required();
  pd->add_option("--rel-tol", cfg.rel_tol);

  // polyzeta
  std::string pz_family, pz_N;
  bool pz_diag = false;
  auto *pz = app.add_subcommand("polyzeta", "zeta_n(-N;P) for a family P_1..P_n");
  pz->add_option("--family", pz_family, "JSON file or inline JSON")->required();
  pz->add_option("--N", pz_N)->required();
  pz->add_option("--rel-tol", cfg.rel_tol);
  pz->add_flag("--diagonal", pz_diag, "use the generalized gamma formula for diagonal P_n");

  // bernoulli-id
  std::string bi_grid = "8x8", bi_out;
  bool bi_timings = false;
  auto *bi = app.add_subcommand("bernoulli-id", "check the double Bernoulli identity on a grid");
  bi->add_option("--grid", bi_grid, "N1maxxN2max");
  bi->add_option("--json", bi_out, "write the reports to this file");
  bi->add_flag("--timings", bi_timings, "include per-report timings");

  // oracle
  auto *orc = app.add_subcommand("oracle", "Euler-Maclaurin oracles");
  orc->require_subcommand(1);
  std::string o1_gamma = "1", o1_s;
  unsigned o1_d = 1;
  auto *o1 = orc->add_subcommand("zeta1", "gamma^{-s} zeta(d s)");
  o1->add_option("--d", o1_d)->required();
  o1->add_option("--gamma", o1_gamma);
  o1->add_option("--s", o1_s)->required();
  std::string o2_d, o2_gamma = "1,1", o2_N, o2_s;
  unsigned o2_K = 8, o2_trunc = 256;
  auto *o2 = orc->add_subcommand("powersum2", "two-variable continuation");
  o2->add_option("--d", o2_d)->required();
  o2->add_option("--gamma", o2_gamma);
  auto *o2_N_opt = o2->add_option("--N", o2_N, "evaluate at -N");
  auto *o2_s_opt = o2->add_option("--s", o2_s, "real arguments s1,s2");
  o2_N_opt->excludes(o2_s_opt);
  o2->add_option("--K", o2_K);
  o2->add_option("--truncation", o2_trunc);

  // selftest
  std::string st_only;
  auto *st = app.add_subcommand("selftest", "run the acceptance suite");
  st->add_option("--only", st_only, "comma list of criterion ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    check_digits(cfg.digits);
    if (cfg.rel_tol <= 0) throw UsageError("--rel-tol must be positive");

    if (*ps || *dl) {
      bool directional = *dl || !ps_theta.empty();
      std::string d = *dl ? dl_d : ps_d, g = *dl ? dl_gamma : ps_gamma, N = *dl ? dl_N : ps_N;
      std::string theta = *dl ? dl_theta : ps_theta;
      PowerSumParams params = PowerSumParams::make(longs(d), rationals(g));
      if (directional) {
        if (N.empty()) throw UsageError("--N is required with --theta");
        std::vector<long> n = longs(N);
        DirectionalResult r = directional_limit(params, {n, rationals(theta)}, cfg.digits);
        json out = special_value_json(r.value, cfg.digits);
        out["C"] = rational_json(r.C);
        out["H"] = rational_json(r.H);
        out["theta_ratio"] = rational_json(r.theta_ratio);
        out["cross_check"] = r.cross_check;
        emit(cfg, out);
      } else if (!ps_s.empty()) {
        emit(cfg, special_value_json(value_mixed_last_nonpositive(params, longs(ps_s), cfg.digits), cfg.digits));
      } else {
        if (N.empty()) throw UsageError("one of --N or --s is required");
        std::vector<long> pt;
        for (unsigned v : naturals(N)) pt.push_back(-static_cast<long>(v));
        emit(cfg, special_value_json(SpecialValue(value_nonpositive(params, pt)), cfg.digits));
      }
    } else if (*mh) {
      MPoly P = load_poly(mh_P);
      MPoly Q = load_poly(mh_Q, P.nvars());
      if (mh_Y) {
        std::vector<Rational> a = rationals(mh_a);
        emit(cfg, special_value_json(Y_value(P, Q, mh_N, a, quad(cfg)), cfg.digits));
      } else {
        MahlerReport r = Z_report(P, Q, mh_N, quad(cfg));
        json out = special_value_json(r.value, cfg.digits);
        out["ellipticity"] = certainty_name(r.ellipticity);
        out["terms"] = r.terms;
        out["integrals"] = r.integrals;
        emit(cfg, out);
      }
    } else if (*pd) {
      MPoly P = load_poly(pd_P);
      MPoly Q = load_poly(pd_Q, P.nvars());
      auto deg = homogeneous_degree(P);
      if (!deg) fail(ErrorCode::NotHomogeneous, "P must be homogeneous");
      std::vector<FamilyEntry> entries;
      for (auto &e : load_json(pd_u)) {
        entries.push_back({e.at("k").get<unsigned>(), e.at("gamma").get<MultiIndex>(), e.value("count", 1u)});
      }
      CompositionFamily u = family_from_entries(*deg, P.nvars(), entries);
      MultiIndex alpha = alpha_of(u);
      SpecialValue v = period_K(P, Q, pd_N, alpha, u, naturals(pd_beta), pd_i, quad(cfg));
      json out = special_value_json(v, cfg.digits);
      out["alpha"] = alpha;
      emit(cfg, out);
    } else if (*pz) {
      PolyFamily fam = family_from_json(load_json(pz_family));
      std::vector<unsigned> N = naturals(pz_N);
      if (pz_diag) {
        validate(fam);
        json out = special_value_json(diagonal_value(fam, N, quad(cfg)), cfg.digits);
        out["flags"] = flags_json(fam.flags);
        emit(cfg, out);
      } else {
        PolyZetaResult r = zeta_P_at(fam, N, quad(cfg));
        json out = special_value_json(r.value, cfg.digits);
        out["flags"] = flags_json(r.flags);
        emit(cfg, out);
      }
    } else if (*bi) {
      auto dims = split(bi_grid, 'x');
      if (dims.size() != 2) throw UsageError("--grid must look like 8x8");
      unsigned a = naturals(dims[0]).at(0), b = naturals(dims[1]).at(0);
      IdentityGrid grid = verify_identity_grid(a, b);
      json pairs = json::array(), singles = json::array();
      for (auto &r : grid.pairs) pairs.push_back(identity_report_json(r, bi_timings));
      for (auto &r : grid.singles) singles.push_back(identity_report_json(r, bi_timings));
      json out{{"grid", {a, b}}, {"all_equal", grid.all_equal()}, {"pairs", pairs}, {"singles", singles}};
      if (!bi_out.empty()) {
        std::ofstream f(bi_out);
        if (!f) fail(ErrorCode::InvalidArgument, "cannot write " + bi_out);
        json full{{"schema", kSchemaVersion}};
        for (auto &[k, v] : out.items()) full[k] = v;
        f << full.dump(2) << "\n";
        emit(cfg, json{{"all_equal", grid.all_equal()}, {"reports", pairs.size() + singles.size()}, {"file", bi_out}});
      } else {
        emit(cfg, out);
      }
      if (!grid.all_equal()) return 1;
    } else if (*o1) {
      EMSettings es;
      es.precision = cfg.digits;
      Numeric v = zeta1_numeric(o1_d, parse_rational(o1_gamma), real(o1_s), es);
      json out = numeric_json(v, cfg.digits);
      out = json{{"kind", "numeric"}, {"value", out["value"]}, {"err", out["err"]}};
      emit(cfg, out);
    } else if (*o2) {
      std::vector<long> d = longs(o2_d);
      std::vector<Rational> g = rationals(o2_gamma);
      if (d.size() != 2 || g.size() != 2) throw UsageError("powersum2 needs two d and two gamma entries");
      if (d[0] < 1 || d[1] < 1) throw UsageError("d entries must be positive");
      BigFloat s1, s2;
      if (!o2_N.empty()) {
        auto N = naturals(o2_N);
        if (N.size() != 2) throw UsageError("--N needs two entries");
        s1 = -BigFloat(N[0]);
        s2 = -BigFloat(N[1]);
      } else {
        auto s = split(o2_s);
        if (s.size() != 2) throw UsageError("--s needs two entries");
        s1 = real(s[0]);
        s2 = real(s[1]);
      }
      EMSettings es;
      es.precision = cfg.digits;
      es.K = o2_K;
      es.truncation = o2_trunc;
      PowerSum2Result r = powersum2_numeric(d[0], d[1], g[0], g[1], s1, s2, es);
      json out{{"kind", "numeric"}};
      json v = numeric_json(r.value, cfg.digits);
      out["value"] = v["value"];
      out["err"] = v["err"];
      out["K"] = r.K;
      out["residual"] = to_decimal(r.residual, 17);
      out["blocks"] = json{{"gamma", numeric_json(r.gamma_block, cfg.digits)},
                           {"half", numeric_json(r.half_block, cfg.digits)},
                           {"k", numeric_json(r.k_block, cfg.digits)},
                           {"remainder", numeric_json(r.remainder_block, cfg.digits)}};
      emit(cfg, out);
    } else if (*st) {
      std::vector<int> only;
      for (long v : longs(st_only)) only.push_back(static_cast<int>(v));
      auto results = run_acceptance(std::cout, only);
      for (auto &r : results)
        if (!r.pass) return 1;
    }
  } catch (const UsageError &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const MzvError &e) {
    emit(cfg, json{{"error", {{"code", error_code_name(e.code())}, {"message", e.what()}}}});
    return 1;
  } catch (const json::exception &e) {
    emit(cfg, json{{"error", {{"code", "ParseError"}, {"message", e.what()}}}});
    return 1;
  }
  return 0;
}
