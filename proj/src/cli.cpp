#include "surdbits/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "surdbits/boxes.hpp"
#include "surdbits/config.hpp"
#include "surdbits/error.hpp"
#include "surdbits/expansion.hpp"
#include "surdbits/findiff.hpp"
#include "surdbits/report.hpp"

namespace surdbits {
namespace {

// --s N selects lambda(s) = sqrt(s) - floor(sqrt(s)); --surd p,q,s,t any surd.
struct PointOptions {
  std::optional<unsigned long> s;
  std::optional<std::string> surd;

  void attach(CLI::App* cmd, const std::string& what) {
    auto* s_opt = cmd->add_option("--s", s, "radicand; the point is " + what);
    auto* surd_opt = cmd->add_option("--surd", surd, "explicit point (p + q*sqrt(s))/2^t as p,q,s,t");
    s_opt->excludes(surd_opt);
  }

  QuadraticSurd resolve() const {
    if (s) return lambda_of(Nat(*s));
    if (!surd) throw Error(ErrorKind::InvalidArgument, "one of --s or --surd is required");
    std::vector<std::string> parts;
    std::stringstream ss(*surd);
    for (std::string part; std::getline(ss, part, ',');) parts.push_back(part);
    if (parts.size() != 4) throw Error(ErrorKind::InvalidArgument, "--surd expects p,q,s,t");
    try {
      Int p(parts[0]);
      Int q(parts[1]);
      Nat rad{Int(parts[2])};
      const unsigned long t = std::stoul(parts[3]);
      return make_surd(std::move(p), std::move(q), std::move(rad), t);
    } catch (const std::invalid_argument&) {
      throw Error(ErrorKind::InvalidArgument, "--surd components must be integers");
    }
  }

  // "s": N for the lambda shorthand, "surd": {...} otherwise.
  void describe(Json& j, const QuadraticSurd& x) const {
    if (s) {
      j["s"] = *s;
    } else {
      j["surd"] = surd_json(x);
    }
  }
};

struct PairOptions {
  PointOptions point;
  std::vector<std::string> flips;

  void attach(CLI::App* cmd) {
    point.attach(cmd, "omega = lambda(s)");
    cmd->add_option("--flip", flips, "X digit flip j:+1, j:-1, or j (toggle); repeatable")->take_all();
  }

  PerturbationPair resolve(const PinOptions& pin) const {
    const QuadraticSurd omega = point.resolve();
    std::vector<Flip> out;
    for (const std::string& f : flips) {
      const auto colon = f.find(':');
      try {
        const Index j = std::stoull(f.substr(0, colon));
        if (colon == std::string::npos) {
          out.push_back(toggle_flip(omega, j, pin));
        } else {
          const std::string dir = f.substr(colon + 1);
          if (dir != "+1" && dir != "1" && dir != "-1") throw std::invalid_argument(dir);
          out.push_back(Flip{j, dir == "-1" ? -1 : 1});
        }
      } catch (const std::invalid_argument&) {
        throw Error(ErrorKind::InvalidArgument, "bad --flip '" + f + "'");
      }
    }
    return apply_x_flips(omega, std::move(out), pin);
  }
};

std::string dump(const Json& j) { return j.dump() + "\n"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact binary expansions of quadratic surds and their digit calculus", "surdbits"};
  app.require_subcommand(1);

  std::optional<std::string> config_path;
  std::optional<std::string> output_path;
  std::optional<std::string> format_flag;
  app.add_option("--config", config_path, "key = value config file (overrides $SURDBITS_CONFIG)");
  app.add_option("--output", output_path, "write results to this file instead of stdout");
  app.add_option("--format", format_flag, "freq output format")->check(CLI::IsMember({"json", "csv"}));

  RunConfig cfg;
  std::function<std::string()> action;

  // digits
  auto* c_digits = app.add_subcommand("digits", "binary digits 1..L of a point in [0, 1)");
  PointOptions digits_point;
  Index digits_bits = 64;
  bool digits_square = false;
  digits_point.attach(c_digits, "lambda(s)");
  c_digits->add_option("--bits", digits_bits, "number of digits")->required();
  c_digits->add_flag("--square", digits_square, "expand the square of the point");
  c_digits->callback([&] {
    action = [&] {
      const QuadraticSurd x = digits_point.resolve();
      const QuadraticSurd target = digits_square ? square_surd(x) : x;
      const DyadicExpansion e = digits(target, digits_bits, PinOptions{64, cfg.guard_bit_cap});
      Json j;
      j["op"] = "digits";
      digits_point.describe(j, x);
      j["square"] = digits_square;
      j["bits"] = digits_bits;
      j["exactness"] = std::string(to_string(e.exactness()));
      j["digits"] = e.str();
      return dump(j);
    };
  });

  // freq
  auto* c_freq = app.add_subcommand("freq", "exact frequency of ones f_n at n = stride, 2 stride, ...");
  PointOptions freq_point;
  Index freq_n = 0;
  std::optional<Index> freq_stride;
  freq_point.attach(c_freq, "lambda(s)");
  c_freq->add_option("--n", freq_n, "number of digits")->required()->check(CLI::PositiveNumber);
  c_freq->add_option("--stride", freq_stride, "row spacing (default n)")->check(CLI::PositiveNumber);
  c_freq->callback([&] {
    action = [&] {
      const QuadraticSurd x = freq_point.resolve();
      const Index stride = freq_stride.value_or(freq_n);
      err << "freq: expanding " << freq_n << " digits\n";
      const DyadicExpansion e = digits(x, freq_n, PinOptions{64, cfg.guard_bit_cap});
      std::vector<Index> idx;
      for (Index n = stride; n <= freq_n; n += stride) idx.push_back(n);
      const auto points = freq_series(e, idx);
      err << "freq: " << points.size() << " rows\n";
      const OutputFormat fmt = format_flag ? (*format_flag == "json" ? OutputFormat::Json : OutputFormat::Csv)
                                           : cfg.output_format.value_or(OutputFormat::Csv);
      if (fmt == OutputFormat::Csv) {
        std::string s = std::string(kFrequencyCsvHeader) + "\n";
        for (const auto& p : points) s += csv_row(p) + "\n";
        return s;
      }
      Json j;
      j["op"] = "freq";
      freq_point.describe(j, x);
      j["n"] = freq_n;
      j["stride"] = stride;
      Json rows = Json::array();
      for (const auto& p : points) rows.push_back(frequency_json(p));
      j["points"] = std::move(rows);
      return dump(j);
    };
  });

  // lemma-points and tailmatch share --s / --l
  auto* c_lemma = app.add_subcommand("lemma-points", "omega_s1 = 1 - sqrt(s)/2^(2l), omega_s2 = (sqrt(s) - 1)/2^l");
  unsigned long lemma_s = 0;
  std::optional<Index> lemma_l;
  c_lemma->add_option("--s", lemma_s, "radicand")->required();
  c_lemma->add_option("--l", lemma_l, "scale with 2^l > s (default: smallest)");
  c_lemma->callback([&] {
    action = [&] {
      const Nat s(lemma_s);
      const Index l = lemma_l.value_or(minimal_scale(s));
      const LemmaPoints pts = build_lemma_points(s, l);
      Json j;
      j["op"] = "lemma-points";
      j["s"] = lemma_s;
      j["l"] = l;
      j["omega_s1"] = surd_json(pts.omega1);
      j["omega_s2"] = surd_json(pts.omega2);
      j["omega_s1_squared"] = surd_json(square_surd(pts.omega1));
      j["omega_s2_squared"] = surd_json(square_surd(pts.omega2));
      return dump(j);
    };
  });

  auto* c_tail = app.add_subcommand("tailmatch", "where the squares of the two lemma points start to agree");
  unsigned long tail_s = 0;
  std::optional<Index> tail_l;
  Index tail_bits = 4096;
  c_tail->add_option("--s", tail_s, "radicand")->required();
  c_tail->add_option("--l", tail_l, "scale with 2^l > s (default: smallest)");
  c_tail->add_option("--bits", tail_bits, "window length")->check(CLI::PositiveNumber);
  c_tail->callback([&] {
    action = [&] {
      const Nat s(tail_s);
      const Index l = tail_l.value_or(minimal_scale(s));
      const LemmaPoints pts = build_lemma_points(s, l);
      const PinOptions pin{64, cfg.guard_bit_cap};
      const auto a = digits(square_surd(pts.omega1), tail_bits, pin);
      const auto b = digits(square_surd(pts.omega2), tail_bits, pin);
      const auto first = first_tail_agreement(a, b);
      Json j;
      j["op"] = "tailmatch";
      j["s"] = tail_s;
      j["l"] = l;
      j["bits"] = tail_bits;
      j["bound"] = 4 * l;
      j["first_agreement"] = first ? Json(*first) : Json(nullptr);
      j["within_bound"] = first.has_value() && *first <= 4 * l + 1;
      return dump(j);
    };
  });

  // nr
  auto* c_nr = app.add_subcommand("nr", "N_r(omega): X prefix length that pins the first r digits of omega^2");
  PointOptions nr_point;
  Index nr_r = 0;
  std::optional<Index> nr_cap;
  nr_point.attach(c_nr, "omega = lambda(s)");
  c_nr->add_option("--r", nr_r, "box resolution")->required()->check(CLI::PositiveNumber);
  c_nr->add_option("--cap", nr_cap, "search cap (default 64r + 64)")->check(CLI::PositiveNumber);
  c_nr->callback([&] {
    action = [&] {
      const QuadraticSurd omega = nr_point.resolve();
      const Index cap = nr_cap ? *nr_cap : cfg.nr_cap.value_or(default_nr_cap(nr_r));
      const Index result = compute_Nr(omega, nr_r, cap, PinOptions{64, cfg.guard_bit_cap});
      Json j;
      j["op"] = "Nr";
      nr_point.describe(j, omega);
      j["r"] = nr_r;
      j["result"] = result;
      return dump(j);
    };
  });

  // mn
  auto* c_mn = app.add_subcommand("mn", "M_n(nu): U prefix length that pins the first n digits of sqrt(nu)");
  PointOptions mn_point;
  Index mn_n = 0;
  std::optional<Index> mn_cap;
  mn_point.attach(c_mn, "nu = lambda(s)^2");
  c_mn->add_option("--n", mn_n, "number of X digits")->required()->check(CLI::PositiveNumber);
  c_mn->add_option("--cap", mn_cap, "search cap (default 64n + 64)")->check(CLI::PositiveNumber);
  c_mn->callback([&] {
    action = [&] {
      const QuadraticSurd nu = mn_point.s ? square_surd(mn_point.resolve()) : mn_point.resolve();
      const Index cap = mn_cap ? *mn_cap : cfg.mn_cap.value_or(default_mn_cap(mn_n));
      const Index result = compute_Mn(nu, mn_n, cap, PinOptions{64, cfg.guard_bit_cap});
      Json j;
      j["op"] = "Mn";
      mn_point.describe(j, nu);
      j["n"] = mn_n;
      j["result"] = result;
      return dump(j);
    };
  });

  // xprefix
  auto* c_xp = app.add_subcommand("xprefix", "X prefix implied by a U prefix, if determined");
  std::string xp_u;
  Index xp_n = 0;
  c_xp->add_option("--u", xp_u, "U prefix as a 0/1 string")->required();
  c_xp->add_option("--n", xp_n, "number of X digits")->required();
  c_xp->callback([&] {
    action = [&] {
      const DyadicExpansion u = DyadicExpansion::from_string(xp_u);
      const PrefixDetermination d = x_prefix_from_u_prefix(u.bits(), xp_n);
      Json j;
      j["op"] = "xprefix";
      j["u"] = xp_u;
      j["n"] = xp_n;
      j["determined"] = d.determined;
      j["x_prefix"] = d.determined ? Json(d.x_prefix.str()) : Json(nullptr);
      j["witness_m"] = d.witness_m;
      return dump(j);
    };
  });

  // pair
  auto* c_pair = app.add_subcommand("pair", "perturbation pair omega -> omega1 and the induced U changes");
  PairOptions pair_opts;
  Index pair_bits = 16;
  pair_opts.attach(c_pair);
  c_pair->add_option("--bits", pair_bits, "number of U coordinates to report")->check(CLI::PositiveNumber);
  c_pair->callback([&] {
    action = [&] {
      const PinOptions pin{64, cfg.guard_bit_cap};
      const PerturbationPair pair = pair_opts.resolve(pin);
      Json j;
      j["op"] = "pair";
      j["pair"] = pair_json(pair);
      j["omega"] = surd_json(pair.omega());
      j["omega1"] = surd_json(pair.omega1());
      j["nu"] = surd_json(pair.nu());
      j["nu1"] = surd_json(pair.nu1());
      j["u"] = digits(pair.nu(), pair_bits, pin).str();
      j["u1"] = digits(pair.nu1(), pair_bits, pin).str();
      Json du = Json::array();
      for (const DeltaU& d : delta_u(pair, pair_bits, pin)) du.push_back(d.du);
      j["delta_u"] = std::move(du);
      return dump(j);
    };
  });

  auto i_max_for = [&](std::optional<Index> flag, Index n, const PerturbationPair& pair, const PinOptions& pin) {
    if (flag) return *flag;
    if (cfg.i_max) return *cfg.i_max;
    const Index cap = cfg.mn_cap.value_or(default_mn_cap(n));
    return default_i_max(n, compute_Mn(pair.nu(), n, cap, pin));
  };

  // totaldiff
  auto* c_total = app.add_subcommand("totaldiff", "telescoping total difference of h_n over U coordinates");
  PairOptions total_pair;
  Index total_n = 0;
  std::optional<Index> total_imax;
  total_pair.attach(c_total);
  c_total->add_option("--n", total_n, "frequency window n")->required()->check(CLI::PositiveNumber);
  c_total->add_option("--imax", total_imax, "number of U coordinates")->check(CLI::PositiveNumber);
  c_total->callback([&] {
    action = [&] {
      const EvalContext ctx{PinOptions{64, cfg.guard_bit_cap}};
      const PerturbationPair pair = total_pair.resolve(ctx.pin);
      const Index i_max = i_max_for(total_imax, total_n, pair, ctx.pin);
      return dump(report_json(total_diff_check(pair, total_n, i_max, ctx), pair));
    };
  });

  // chain
  auto* c_chain = app.add_subcommand("chain", "chain-rule sum over U coordinates for one X coordinate");
  PairOptions chain_pair;
  Index chain_n = 0;
  Index chain_j = 0;
  std::optional<Index> chain_imax;
  chain_pair.attach(c_chain);
  c_chain->add_option("--n", chain_n, "frequency window n")->required()->check(CLI::PositiveNumber);
  c_chain->add_option("--j", chain_j, "X coordinate")->required()->check(CLI::PositiveNumber);
  c_chain->add_option("--imax", chain_imax, "number of U coordinates")->check(CLI::PositiveNumber);
  c_chain->callback([&] {
    action = [&] {
      const EvalContext ctx{PinOptions{64, cfg.guard_bit_cap}};
      const PerturbationPair pair = chain_pair.resolve(ctx.pin);
      const Index i_max = i_max_for(chain_imax, chain_n, pair, ctx.pin);
      return dump(report_json(chain_rule_check(pair, chain_n, chain_j, i_max, ctx), pair));
    };
  });

  // decay
  auto* c_decay = app.add_subcommand("decay", "partial difference dh_{n,k} across a list of n");
  PairOptions decay_pair;
  Index decay_k = 1;
  std::vector<Index> decay_ns{2, 4, 8, 16, 32, 64};
  decay_pair.attach(c_decay);
  c_decay->add_option("--k", decay_k, "U coordinate")->check(CLI::PositiveNumber);
  c_decay->add_option("--ns", decay_ns, "comma-separated n values")->delimiter(',')->check(CLI::PositiveNumber);
  c_decay->callback([&] {
    action = [&] {
      const EvalContext ctx{PinOptions{64, cfg.guard_bit_cap}};
      const PerturbationPair pair = decay_pair.resolve(ctx.pin);
      return dump(report_json(decay_series(pair, decay_k, decay_ns, ctx), pair));
    };
  });

  // invariance
  auto* c_inv = app.add_subcommand("invariance", "spread of dh_n over all 2^k prefixes of nu1");
  PairOptions inv_pair;
  Index inv_k = 1;
  Index inv_n = 0;
  inv_pair.attach(c_inv);
  c_inv->add_option("--k", inv_k, "prefix length (<= 16)");
  c_inv->add_option("--n", inv_n, "frequency window n")->required()->check(CLI::PositiveNumber);
  c_inv->callback([&] {
    action = [&] {
      const EvalContext ctx{PinOptions{64, cfg.guard_bit_cap}};
      const PerturbationPair pair = inv_pair.resolve(ctx.pin);
      return dump(report_json(invariance_check(pair.nu(), pair, inv_k, inv_n, ctx), pair));
    };
  });

  std::vector<const char*> argv{"surdbits"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (config_path) {
      cfg = load_config_file(*config_path);
    } else if (const char* env = std::getenv(kConfigEnvVar); env != nullptr && *env != '\0') {
      cfg = load_config_file(env);
    }
    const std::string result = action();
    const auto path = output_path ? output_path : cfg.output_path;
    if (path) {
      std::ofstream file(*path, std::ios::binary);
      if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write " + *path);
      file << result;
    } else {
      out << result;
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::PrecisionExhausted: return kExitPrecision;
      case ErrorKind::SearchExhausted: return kExitSearch;
      default: return kExitUsage;
    }
  }
}

}  // namespace surdbits
