// k3bn: command-line front end. Exit status 0 success / all checks pass,
// 1 a verify case or cocycle check failed, 2 bad input.

#include "k3bn/bn.hpp"
#include "k3bn/clifford.hpp"
#include "k3bn/json_io.hpp"
#include "k3bn/koszul.hpp"
#include "k3bn/mukai.hpp"
#include "k3bn/row_scan.hpp"
#include "k3bn/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>

namespace {

using namespace k3bn;
using json_io::Json;
using json_io::class_json;
using json_io::integer_json;
using json_io::rational_json;

struct Globals {
  bool json = false;
  bool quiet = false;
  long bound = 50;
  std::string kernel = "auto";
  std::string config;
};

struct Output {
  const Globals& g;
  void operator()(const Json& j, const std::string& human) const {
    if (g.quiet) return;
    if (g.json)
      std::cout << j.dump(2) << "\n";
    else
      std::cout << human;
  }
};

// Config values fill in options the command line left unset.
void apply_config(CLI::App& app, Globals& g) {
  if (g.config.empty()) return;
  const Json cfg = json_io::load_file(g.config);
  if (!cfg.is_object()) throw InputError(g.config + ": $: expected an object");
  for (const auto& [key, val] : cfg.items()) {
    const std::string where = g.config + ": $." + key;
    if (key == "json") {
      if (!val.is_boolean()) throw InputError(where + ": expected a boolean");
      if (app.count("--json") == 0) g.json = val.get<bool>();
    } else if (key == "quiet") {
      if (!val.is_boolean()) throw InputError(where + ": expected a boolean");
      if (app.count("--quiet") == 0) g.quiet = val.get<bool>();
    } else if (key == "bound") {
      const Integer b = json_io::to_integer(val, where);
      if (!b.fits_slong_p()) throw InputError(where + ": out of range");
      if (app.count("--bound") == 0) g.bound = b.get_si();
    } else if (key == "kernel") {
      if (!val.is_string()) throw InputError(where + ": expected a string");
      if (app.count("--kernel") == 0) g.kernel = val.get<std::string>();
    } else {
      throw InputError(where + ": unknown key");
    }
  }
}

void apply_kernel(const std::string& k) {
  if (k == "auto") return;
  if (k == "scalar")
    scan::set_active_backend(scan::Backend::Scalar);
  else if (k == "avx2")
    scan::set_active_backend(scan::Backend::Avx2);
  else
    throw InputError("--kernel must be auto, scalar or avx2");
}

DivisorClass parse_class(const std::string& text, std::size_t rank, const char* what) {
  DivisorClass c(parse_integer_list(text));
  if (c.size() != rank)
    throw InputError(std::string(what) + " has " + std::to_string(c.size()) + " coordinates, lattice rank is " +
                     std::to_string(rank));
  return c;
}

PicardLattice load_lattice(const std::string& path) {
  const Json j = json_io::load_file(path);
  try {
    return json_io::lattice_from_json(j);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

// ---- family options shared by cliff and gonality

struct FamilyOpts {
  std::string family;
  long p = 0, a = 0, b = 0;
  std::string surface, curve;
  std::string genus;
  long m_cap = 0;
  bool list = false;

  void add(CLI::App* sub) {
    sub->add_option("--family", family, "prop33 or thm41")->check(CLI::IsMember({"prop33", "thm41"}));
    sub->add_option("--p", p);
    sub->add_option("--a", a);
    sub->add_option("--b", b);
    sub->add_option("--surface", surface, "lattice JSON file (custom family)");
    sub->add_option("--curve", curve, "curve class coordinates, e.g. 0,1");
    sub->add_option("--g", genus, "genus of the curve");
    sub->add_option("--m-cap", m_cap, "|m| bound (default 10(g-1))");
  }

  SurfaceFamily build(CLI::App* sub) const {
    if (!family.empty() && !surface.empty()) throw InputError("give either --family or --surface");
    if (family == "prop33") {
      if (sub->count("--p") == 0 || sub->count("--a") == 0) throw InputError("prop33 needs --p and --a");
      return SurfaceFamily::prop33(p, a);
    }
    if (family == "thm41") {
      if (sub->count("--a") == 0 || sub->count("--b") == 0) throw InputError("thm41 needs --a and --b");
      return SurfaceFamily::thm41(a, b);
    }
    if (surface.empty()) throw InputError("give --family or --surface");
    PicardLattice lat = load_lattice(surface);
    if (curve.empty()) throw InputError("--surface needs --curve");
    DivisorClass c = parse_class(curve, lat.rank(), "--curve");
    Integer g;
    if (genus.empty()) {
      g = square(lat, c) / 2 + 1;
    } else {
      g = parse_integer(genus);
    }
    return SurfaceFamily::custom(std::move(lat), std::move(c), g);
  }

  SearchBounds bounds(CLI::App* sub, const Globals& gl) const {
    SearchBounds sb;
    if (gl.bound < 1) throw InputError("--bound must be positive");
    sb.n_range = gl.bound;
    sb.root_bound = gl.bound;
    if (sub->count("--m-cap")) {
      if (m_cap < 1) throw InputError("--m-cap must be positive");
      sb.m_cap = Integer(m_cap);
    }
    return sb;
  }
};

Json flags_json(const FeasibilityFlags& f) {
  Json j;
  j["i"] = f.cond_i;
  j["ii"] = f.cond_ii;
  j["iii"] = f.cond_iii;
  j["branch"] = std::string(branch_name(f.branch));
  return j;
}

Json search_json(const SearchReport& r, bool list) {
  Json j;
  j["family"] = std::string(family_name(r.family.kind));
  if (r.family.kind == FamilyKind::Prop33) j["p"] = r.family.p;
  if (r.family.kind != FamilyKind::Custom) j["a"] = r.family.a;
  if (r.family.kind == FamilyKind::Thm41) j["b"] = r.family.b;
  j["lattice"] = json_io::lattice_to_json(r.family.lattice);
  j["genus"] = integer_json(r.family.genus);
  j["n_range"] = integer_json(r.n_range);
  j["m_cap"] = integer_json(r.m_cap);
  j["feasible_count"] = integer_json(r.feasible_count);
  j["min_cliff"] = r.min_cliff ? integer_json(*r.min_cliff) : Json(nullptr);
  Json am = Json::array();
  for (const auto& d : r.argmin) am.push_back(class_json(d));
  j["argmin"] = am;
  j["generic_bound"] = integer_json(r.generic_bound);
  j["concluded_cliff"] = integer_json(r.concluded_cliff);
  j["gonality"] = integer_json(r.concluded_cliff + 2);
  j["predicted_cliff"] = r.predicted_cliff ? integer_json(*r.predicted_cliff) : Json(nullptr);
  j["verdict"] = r.verdict;
  if (r.family.kind == FamilyKind::Custom) {
    j["unverified_feasibility"] = r.unverified_feasibility;
    j["root_search_bound"] = integer_json(r.root_search_bound);
  }
  if (list) {
    Json fs = Json::array();
    for (const auto& c : r.feasible) {
      Json jc;
      jc["m"] = integer_json(c.m);
      jc["n"] = integer_json(c.n);
      jc["DC"] = integer_json(c.dc);
      jc["DD"] = integer_json(c.dd);
      jc["cliff"] = integer_json(c.cliff);
      jc["conditions"] = flags_json(c.flags);
      fs.push_back(std::move(jc));
    }
    j["feasible"] = std::move(fs);
  }
  return j;
}

std::string search_human(const SearchReport& r, bool list) {
  std::ostringstream os;
  os << "family " << family_name(r.family.kind) << ", genus " << r.family.genus << ", search |n| <= " << r.n_range
     << ", |m| <= " << r.m_cap << "\n";
  os << "feasible divisors: " << r.feasible_count << "\n";
  if (list)
    for (const auto& c : r.feasible)
      os << "  m=" << c.m << " n=" << c.n << "  D.C=" << c.dc << " D^2=" << c.dd << " cliff=" << c.cliff << "\n";
  if (r.min_cliff) {
    os << "min Cliff(O_C(D)) = " << *r.min_cliff << " at";
    for (const auto& d : r.argmin) os << " (m,n)=(" << d[0] << "," << d[1] << ")";
    os << "\n";
  } else {
    os << "no feasible divisor\n";
  }
  os << "Cliff(C) = " << r.concluded_cliff << " (generic bound " << r.generic_bound << "), gonality "
     << r.concluded_cliff + 2 << "\n";
  if (r.predicted_cliff)
    os << "predicted Cliff = " << *r.predicted_cliff << ": " << (r.verdict ? "confirmed" : "NOT confirmed") << "\n";
  if (r.family.kind == FamilyKind::Custom && r.unverified_feasibility)
    os << "warning: (-2)-classes within |x| <= " << r.root_search_bound
       << "; the numeric feasibility proxy is unverified\n";
  return os.str();
}

Json mukai_json(const MukaiVector& v) {
  Json j = Json::array();
  for (const auto& x : v.flatten()) j.push_back(integer_json(x));
  return j;
}

Json fm_json(const FMDualResult& r) {
  Json j;
  Json basis = Json::array();
  for (const auto& b : r.basis) basis.push_back(mukai_json(b));
  j["basis"] = basis;
  j["gram"] = json_io::matrix_json(r.lattice.gram());
  j["discriminant"] = integer_json(r.lattice.determinant());
  Json pol;
  pol["mukai"] = mukai_json(r.polarization);
  pol["coords"] = class_json(r.polarization_coords);
  pol["square"] = integer_json(square(r.lattice, r.polarization_coords));
  j["polarization"] = pol;
  j["v"] = mukai_json(r.v);
  j["genus"] = integer_json(r.genus);
  if (r.distinguished) {
    Json d;
    d["coords"] = class_json(r.distinguished->coords);
    d["mukai"] = mukai_json(r.distinguished->lift);
    d["square"] = integer_json(r.distinguished->square);
    d["pairing"] = integer_json(r.distinguished->pairing);
    j["distinguished"] = d;
  } else {
    j["distinguished"] = nullptr;
  }
  return j;
}

std::string fm_human(const FMDualResult& r) {
  std::ostringstream os;
  os << "v = " << r.v.to_string() << ", genus " << r.genus << "\n";
  os << "dual lattice basis (Mukai lifts):\n";
  for (std::size_t i = 0; i < r.basis.size(); ++i)
    os << "  " << r.lattice.labels()[i] << " = " << r.basis[i].to_string() << "\n";
  os << "gram:\n";
  for (std::size_t i = 0; i < r.lattice.rank(); ++i) {
    os << " ";
    for (std::size_t c = 0; c < r.lattice.rank(); ++c) os << " " << r.lattice.gram()(i, c);
    os << "\n";
  }
  os << "discriminant " << r.lattice.determinant() << "\n";
  os << "polarization " << r.polarization.to_string() << " = " << r.polarization_coords.to_string() << "\n";
  if (r.distinguished)
    os << "(-2)-class of least degree: " << r.distinguished->coords.to_string() << " = "
       << r.distinguished->lift.to_string() << ", degree " << r.distinguished->pairing << "\n";
  else
    os << "no (-2)-class of positive degree within the bound\n";
  return os.str();
}

std::string rat_vec(const std::vector<Rational>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + "]";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k3bn: lattice, Clifford index, Fourier-Mukai and Koszul computations on K3 surfaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_flag("--quiet", g.quiet, "no output; exit status only");
  app.add_option("--bound", g.bound, "search bound (coordinates, n range)");
  app.add_option("--kernel", g.kernel, "row-scan kernel: auto, scalar, avx2");
  app.add_option("--config", g.config, "JSON file with defaults for the global options");

  // cliff / gonality
  FamilyOpts cliff_opts, gon_opts;
  auto* cliff = app.add_subcommand("cliff", "Green-Lazarsfeld search for Cliff(C)");
  cliff_opts.add(cliff);
  cliff->add_flag("--list", cliff_opts.list, "list every feasible divisor");
  auto* gon = app.add_subcommand("gonality", "gonality = Cliff(C) + 2");
  gon_opts.add(gon);

  // mukai-pair
  std::string mp_lattice, mp_x, mp_y;
  auto* mp = app.add_subcommand("mukai-pair", "Mukai pairing of two vectors (r, c, s)");
  mp->add_option("--lattice", mp_lattice)->required();
  mp->add_option("--x", mp_x)->required();
  mp->add_option("--y", mp_y)->required();

  // fm-dual
  std::string fm_lattice, fm_ell, fm_r, fm_s;
  auto* fm = app.add_subcommand("fm-dual", "Picard lattice of the Fourier-Mukai partner for v = (r, ell, s)");
  fm->add_option("--lattice", fm_lattice)->required();
  fm->add_option("--ell", fm_ell)->required();
  fm->add_option("--r", fm_r)->required();
  fm->add_option("--s", fm_s)->required();

  // nl-check
  std::string nl_lattice, nl_ell, nl_h2, nl_hl, nl_r, nl_s;
  auto* nl = app.add_subcommand("nl-check", "find a class with given square and degree");
  nl->add_option("--lattice", nl_lattice)->required();
  nl->add_option("--ell", nl_ell)->required();
  nl->add_option("--h2", nl_h2, "square of the class")->required();
  nl->add_option("--hl", nl_hl, "pairing with ell")->required();
  nl->add_option("--dual-r", nl_r, "search the FM partner for v = (r, ell, s) instead");
  nl->add_option("--dual-s", nl_s);

  // koszul
  std::string ks_ring;
  int ks_p = 0, ks_q = 0;
  auto* ks = app.add_subcommand("koszul", "dim K_{p,q} from multiplication tables");
  ks->add_option("--ring", ks_ring)->required();
  ks->add_option("--p", ks_p)->required();
  ks->add_option("--q", ks_q)->required();

  // zeta
  std::string zt_lambda, zt_ring;
  auto* zt = app.add_subcommand("zeta", "syzygy tensor of a determinant map");
  zt->add_option("--lambda", zt_lambda)->required();
  zt->add_option("--ring", zt_ring, "ring with mult[1] for the cocycle check");

  // bn
  auto* bn = app.add_subcommand("bn", "Brill-Noether numerics");
  bn->require_subcommand(1);
  std::string bn_g, bn_r, bn_d, bn_n, bn_h0, bn_gammas, bn_cliff;
  auto* bn_rho = bn->add_subcommand("rho", "Brill-Noether number");
  bn_rho->add_option("--g", bn_g)->required();
  bn_rho->add_option("--r", bn_r)->required();
  bn_rho->add_option("--d", bn_d)->required();
  auto* bn_mindeg = bn->add_subcommand("mindeg", "smallest d with rho >= 0");
  bn_mindeg->add_option("--g", bn_g)->required();
  bn_mindeg->add_option("--r", bn_r)->required();
  auto* bn_gamma = bn->add_subcommand("gamma", "Clifford index of a bundle");
  bn_gamma->add_option("--n", bn_n)->required();
  bn_gamma->add_option("--d", bn_d)->required();
  bn_gamma->add_option("--h0", bn_h0)->required();
  bn_gamma->add_option("--g", bn_g)->required();
  auto* bn_lm = bn->add_subcommand("lm", "Lazarsfeld-Mukai bundle numerics");
  bn_lm->add_option("--g", bn_g)->required();
  bn_lm->add_option("--r", bn_r)->required();
  auto* bn_mercat = bn->add_subcommand("mercat", "compare bundle gammas with Cliff(C)");
  bn_mercat->add_option("--gammas", bn_gammas, "comma separated rationals")->required();
  bn_mercat->add_option("--cliff", bn_cliff)->required();

  // verify
  std::string vf_theorem, vf_p, vf_a, vf_b;
  long vf_span = 0, vf_mcap = 0;
  auto* vf = app.add_subcommand("verify", "regression sweep over a construction");
  vf->add_option("--theorem", vf_theorem, "prop33, thm41, fm-table, lm-gamma")->required();
  vf->add_option("--p-range", vf_p, "lo:hi");
  vf->add_option("--a-range", vf_a, "lo:hi");
  vf->add_option("--a-span", vf_span, "number of a values from 2p+3");
  vf->add_option("--b-range", vf_b, "lo:hi");
  vf->add_option("--m-cap", vf_mcap);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const Output out{g};
  try {
    apply_config(app, g);
    apply_kernel(g.kernel);

    if (cliff->parsed() || gon->parsed()) {
      auto* sub = cliff->parsed() ? cliff : gon;
      FamilyOpts& fo = cliff->parsed() ? cliff_opts : gon_opts;
      const SurfaceFamily fam = fo.build(sub);
      const SearchReport r = min_clifford(fam, fo.bounds(sub, g));
      if (cliff->parsed()) {
        out(search_json(r, fo.list), search_human(r, fo.list));
      } else {
        Json j;
        j["gonality"] = integer_json(r.concluded_cliff + 2);
        j["cliff"] = integer_json(r.concluded_cliff);
        out(j, "gonality " + to_string(Integer(r.concluded_cliff + 2)) + "\n");
      }
      return 0;
    }

    if (mp->parsed()) {
      const ExtendedLattice e(load_lattice(mp_lattice));
      const MukaiVector x = MukaiVector::unflatten(parse_integer_list(mp_x));
      const MukaiVector y = MukaiVector::unflatten(parse_integer_list(mp_y));
      if (x.c.size() != e.ns().rank() || y.c.size() != e.ns().rank())
        throw InputError("Mukai vectors need rank(NS) + 2 = " + std::to_string(e.rank()) + " coordinates");
      const Integer xy = mukai_pair(e, x, y), xx = mukai_pair(e, x, x), yy = mukai_pair(e, y, y);
      Json j;
      j["x"] = mukai_json(x);
      j["y"] = mukai_json(y);
      j["pairing"] = integer_json(xy);
      j["x_square"] = integer_json(xx);
      j["y_square"] = integer_json(yy);
      out(j, "<x,y> = " + to_string(xy) + "\nx^2 = " + to_string(xx) + "\ny^2 = " + to_string(yy) + "\n");
      return 0;
    }

    if (fm->parsed()) {
      const ExtendedLattice e(load_lattice(fm_lattice));
      const DivisorClass ell = parse_class(fm_ell, e.ns().rank(), "--ell");
      const FMDualResult r = fm_dual(e, ell, parse_integer(fm_r), parse_integer(fm_s), Integer(g.bound));
      out(fm_json(r), fm_human(r));
      return 0;
    }

    if (nl->parsed()) {
      PicardLattice lat = load_lattice(nl_lattice);
      DivisorClass ell = parse_class(nl_ell, lat.rank(), "--ell");
      if (nl->count("--dual-r") != nl->count("--dual-s")) throw InputError("give both --dual-r and --dual-s");
      if (!nl_r.empty()) {
        const FMDualResult r = fm_dual(ExtendedLattice(lat), ell, parse_integer(nl_r), parse_integer(nl_s),
                                       Integer(g.bound));
        lat = r.lattice;
        ell = r.polarization_coords;
      }
      const auto m = nl_member(lat, ell, parse_integer(nl_h2), parse_integer(nl_hl), Integer(g.bound));
      Json j;
      j["found"] = m.has_value();
      j["class"] = m ? class_json(*m) : Json(nullptr);
      out(j, m ? "found " + m->to_string() + "\n" : std::string("none within bound ") + std::to_string(g.bound) + "\n");
      return 0;
    }

    if (ks->parsed()) {
      const Json jr = json_io::load_file(ks_ring);
      GradedRingData ring;
      try {
        ring = json_io::ring_from_json(jr);
      } catch (const InputError& e) {
        throw InputError(ks_ring + ": " + e.what());
      }
      const std::size_t dim = koszul_dim(ks_p, ks_q, ring);
      Json j;
      j["p"] = ks_p;
      j["q"] = ks_q;
      j["dim"] = dim;
      out(j, "dim K_{" + std::to_string(ks_p) + "," + std::to_string(ks_q) + "} = " + std::to_string(dim) + "\n");
      return 0;
    }

    if (zt->parsed()) {
      const Json jl = json_io::load_file(zt_lambda);
      LambdaData ld;
      std::optional<GradedRingData> ring;
      try {
        ld = json_io::lambda_from_json(jl);
        if (jl.contains("ring")) ring = json_io::ring_from_json(jl["ring"], "$.ring");
      } catch (const InputError& e) {
        throw InputError(zt_lambda + ": " + e.what());
      }
      if (!zt_ring.empty()) {
        try {
          ring = json_io::ring_from_json(json_io::load_file(zt_ring));
        } catch (const InputError& e) {
          throw InputError(zt_ring + ": " + e.what());
        }
      }
      const SyzygyTensor t = zeta_tensor(ld);
      const int rb = syzygy_rank_bound(t);
      Json j;
      j["p"] = t.p;
      j["w_dim"] = t.w_dim();
      Json w = Json::array();
      for (std::size_t i = 0; i < t.w_basis.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < t.w_basis.cols(); ++c) row.push_back(rational_json(t.w_basis(i, c)));
        w.push_back(row);
      }
      j["w_basis"] = w;
      Json co = Json::array();
      for (const auto& x : t.coords) co.push_back(rational_json(x));
      j["coords"] = co;
      j["zero"] = t.is_zero();
      j["rank_bound"] = rb;
      std::ostringstream hs;
      hs << "zeta in wedge^" << t.p << " W (x) H^0(L), dim W = " << t.w_dim() << "\n";
      hs << "coords " << rat_vec(t.coords) << "\n";
      hs << "rank bound " << rb << "\n";
      int rc = 0;
      if (ring) {
        const auto res = cocycle_residual(t, *ring);
        const bool ok = std::all_of(res.begin(), res.end(), [](const Rational& x) { return x == 0; });
        j["cocycle"] = ok;
        hs << "cocycle check d_{p,1}(zeta) = 0: " << (ok ? "PASS" : "FAIL") << "\n";
        if (!ok) rc = 1;
      }
      out(j, hs.str());
      return rc;
    }

    if (bn->parsed()) {
      if (bn_rho->parsed()) {
        const Integer v = rho(parse_integer(bn_g), parse_integer(bn_r), parse_integer(bn_d));
        Json j;
        j["rho"] = integer_json(v);
        out(j, "rho = " + to_string(v) + "\n");
      } else if (bn_mindeg->parsed()) {
        const Integer v = minimal_degree(parse_integer(bn_g), parse_integer(bn_r));
        Json j;
        j["minimal_degree"] = integer_json(v);
        out(j, "minimal degree " + to_string(v) + "\n");
      } else if (bn_gamma->parsed()) {
        const GammaResult r =
            gamma({parse_integer(bn_n), parse_integer(bn_d), parse_integer(bn_h0), parse_integer(bn_g)});
        Json j;
        j["gamma"] = rational_json(r.gamma);
        j["degree_ok"] = r.degree_ok;
        j["sections_ok"] = r.sections_ok;
        j["contributes"] = r.contributes();
        out(j, "gamma = " + to_string(r.gamma) + (r.contributes() ? "" : " (does not contribute)") + "\n");
      } else if (bn_lm->parsed()) {
        const LMNumerics m = lm_numerics(parse_integer(bn_g), parse_integer(bn_r));
        Json j;
        j["g"] = integer_json(m.g);
        j["r"] = integer_json(m.r);
        j["d"] = integer_json(m.d);
        j["h0_E"] = integer_json(m.h0_e);
        j["rank_E"] = integer_json(m.rank_e);
        j["deg_E"] = integer_json(m.deg_e);
        j["gamma_E"] = rational_json(m.gamma_e);
        j["c1_sq"] = integer_json(m.c1_sq);
        j["c2"] = integer_json(m.c2);
        j["delta"] = integer_json(m.delta);
        j["bogomolov_threshold"] = rational_json(m.bogomolov_threshold);
        j["generic_cliff"] = integer_json(m.generic_cliff);
        j["mercat_violated"] = m.mercat_violated;
        j["nonsplit_claim_in_range"] = m.nonsplit_claim_in_range;
        std::ostringstream hs;
        hs << "g=" << m.g << " r=" << m.r << " d=" << m.d << "\n";
        hs << "E: rank " << m.rank_e << ", degree " << m.deg_e << ", h0 " << m.h0_e << ", gamma " << m.gamma_e
           << "\n";
        hs << "M: c1^2 " << m.c1_sq << ", c2 " << m.c2 << ", discriminant " << m.delta << ", Bogomolov threshold "
           << m.bogomolov_threshold << "\n";
        hs << "generic Cliff " << m.generic_cliff << ": " << (m.mercat_violated ? "gamma below it" : "no violation")
           << "\n";
        if (!m.nonsplit_claim_in_range) hs << "note: r > 2 is outside the range of the non-splitting argument\n";
        out(j, hs.str());
      } else if (bn_mercat->parsed()) {
        std::vector<Rational> gs;
        std::string item;
        std::istringstream is(bn_gammas);
        while (std::getline(is, item, ',')) gs.push_back(parse_rational(item));
        const MercatVerdict v = mercat_compare(gs, parse_integer(bn_cliff));
        Json j;
        j["min_gamma"] = rational_json(v.min_gamma);
        j["cliff"] = integer_json(v.cliff);
        j["violations"] = v.violations;
        j["violated"] = v.violated();
        j["gap"] = rational_json(v.gap());
        out(j, std::string(v.violated() ? "violated" : "holds") + ": min gamma " + to_string(v.min_gamma) +
                   ", Cliff " + to_string(v.cliff) + ", gap " + to_string(v.gap()) + "\n");
      }
      return 0;
    }

    if (vf->parsed()) {
      VerifyPlan plan;
      plan.theorem = parse_theorem(vf_theorem);
      if (!vf_p.empty()) plan.p_range = parse_range(vf_p);
      if (!vf_a.empty()) plan.a_range = parse_range(vf_a);
      if (!vf_b.empty()) plan.b_range = parse_range(vf_b);
      if (vf->count("--a-span")) plan.a_span = vf_span;
      if (vf->count("--m-cap")) plan.m_cap = vf_mcap;
      plan.bound = g.bound;
      const Report rep = run_verify(plan);
      if (!g.quiet) std::cout << (g.json ? emit_json(rep) : emit_human(rep));
      return rep.exit_code();
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
