#include "nullstrata/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nullstrata/count.hpp"
#include "nullstrata/io.hpp"
#include "nullstrata/oracle.hpp"

namespace nullstrata::cli {

namespace {

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<Rational> parse_coords(const std::string& s) {
  std::vector<Rational> out;
  if (s.empty()) return out;
  for (const auto& tok : split(s, ',')) out.push_back(parse_rational(tok));
  return out;
}

void add_options(CLI::App& sub, JobSpec& job) {
  sub.add_option("--type", job.type, "Group type, e.g. A2, B2xA1, A1+T1")->capture_default_str();
  sub.add_option("--module", job.module, "adjoint | dual-adjoint | hw:<coeffs> | dual-hw:<coeffs> | weights:<w>;<w>")
      ->capture_default_str();
  sub.add_option("--eval", job.eval, "Comma-separated prime powers at which to evaluate")->delimiter(',');
  sub.add_option("--format", job.format, "json | tsv")->check(CLI::IsMember({"json", "tsv"}))->capture_default_str();
  sub.add_option("--threads", job.threads, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  sub.add_flag("--no-memo{false}", job.memo, "Disable the sub-nullcone memo table");
  sub.add_option("--subset-bound", job.subset_bound, "Largest weight subset in candidate generation (0: rank)")
      ->check(CLI::NonNegativeNumber);
  sub.add_option("--lattice", job.lattice, "Cocharacter lattice: sc (coroots) | adjoint (coweights)")
      ->check(CLI::IsMember({"sc", "adjoint"}))
      ->capture_default_str();
}

}  // namespace

std::vector<std::string> JobSpec::to_args() const {
  std::vector<std::string> a{subcommand, "--type", type, "--module", module, "--format", format, "--threads",
                             std::to_string(threads), "--lattice", lattice};
  if (!eval.empty()) a.insert(a.end(), {"--eval", join(eval)});
  if (!memo) a.emplace_back("--no-memo");
  if (subset_bound) a.insert(a.end(), {"--subset-bound", std::to_string(subset_bound)});
  if (subcommand == "blade" && !support.empty()) a.insert(a.end(), {"--support", support});
  if (subcommand == "verify") {
    a.insert(a.end(), {"--suite", suite});
    if (!q.empty()) a.insert(a.end(), {"--q", join(q)});
  }
  return a;
}

JobSpec parse_job(const std::vector<std::string>& args, std::ostream& out) {
  JobSpec job;
  CLI::App app{"nullstrata: Hesselink strata and finite-field point counts of nullcones", "nullstrata"};
  app.require_subcommand(1);
  struct Entry {
    const char* name;
    const char* help;
  };
  const Entry entries[] = {
      {"roots", "Dump the root datum"},
      {"character", "Weight multiset of the module"},
      {"strata", "Hesselink strata of the nullcone"},
      {"count", "Point-count polynomial n_V(t) with per-stratum contributions"},
      {"blade", "Torus-optimal cocharacter of an explicit weight support"},
      {"verify", "Brute-force finite-field oracle suites"},
      {"unipotent", "Unipotent-variety piece counts (adjoint module only)"},
  };
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    add_options(*sub, job);
    if (std::string(e.name) == "blade")
      sub->add_option("--support", job.support, "Comma-separated indices into the character's weight list")
          ->required();
    if (std::string(e.name) == "verify") {
      sub->add_option("--suite", job.suite, "sl2 | sl3 | binary | torus | all")
          ->check(CLI::IsMember({"sl2", "sl3", "binary", "torus", "all"}))
          ->capture_default_str();
      sub->add_option("--q", job.q, "Comma-separated field sizes")->delimiter(',');
    }
    sub->callback([&job, name = std::string(e.name)] { job.subcommand = name; });
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return JobSpec{};
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return JobSpec{};
  } catch (const CLI::ParseError& e) {
    throw InputError(e.what());
  }
  return job;
}

ModuleCharacter build_module(const DatumPtr& datum, const std::string& spec) {
  auto strip = [&](const std::string& prefix) { return spec.substr(prefix.size()); };
  auto starts = [&](const std::string& prefix) { return spec.rfind(prefix, 0) == 0; };
  if (spec == "adjoint") return adjoint_character(datum);
  if (spec == "dual-adjoint") return dual_character(adjoint_character(datum));
  if (starts("hw:") || starts("dual-hw:")) {
    const bool dual = starts("dual-");
    const std::string body = strip(dual ? "dual-hw:" : "hw:");
    std::vector<Rational> coords(static_cast<std::size_t>(datum->rank()), Rational(0));
    const auto groups = split(body, '/');
    if (groups.size() == 1) {
      const auto c = parse_coords(groups[0]);
      if (static_cast<int>(c.size()) > datum->rank()) throw InputError("too many highest-weight coefficients");
      std::copy(c.begin(), c.end(), coords.begin());
    } else {
      const auto& factors = datum->type().factors;
      std::size_t offset = 0;
      for (std::size_t g = 0; g < groups.size(); ++g) {
        const auto c = parse_coords(groups[g]);
        const std::size_t width = g < factors.size() ? static_cast<std::size_t>(factors[g].rank)
                                                     : static_cast<std::size_t>(datum->type().torus);
        if (g > factors.size() || c.size() > width) throw InputError("highest-weight group does not fit its factor");
        std::copy(c.begin(), c.end(), coords.begin() + static_cast<std::ptrdiff_t>(offset));
        offset += width;
      }
    }
    const auto ch = highest_weight_character(datum, weight_from_coordinates(*datum, coords));
    return dual ? dual_character(ch) : ch;
  }
  if (starts("weights:")) {
    std::vector<WeightEntry> weights;
    for (const auto& w : split(strip("weights:"), ';')) {
      const auto c = parse_coords(w);
      if (static_cast<int>(c.size()) != datum->rank()) throw InputError("weight '" + w + "' has the wrong length");
      const RVec v = weight_from_coordinates(*datum, c);
      weights.push_back({v, 1});
    }
    ModuleCharacter ch(datum, std::move(weights));
    if (!is_weyl_invariant(ch)) throw InputError("weight multiset is not Weyl-invariant");
    return ch;
  }
  throw InputError("unknown module specification '" + spec + "'");
}

namespace {

struct VerifyRow {
  std::string suite, name;
  int q;
  std::string cls;
  Integer oracle, poly;
  bool ok() const { return oracle == poly; }
};

const Stratum* find_stratum(const std::vector<Stratum>& strata, const ZVec& lambda, long k) {
  for (const auto& s : strata)
    if (s.k == k && equal(s.lambda_coords, lambda)) return &s;
  return nullptr;
}

void verify_nilpotent(int n, const std::vector<int>& qs, StrataEngine& engine, std::vector<VerifyRow>& rows) {
  const auto datum = RootDatum::build(TypeSpec{{{'A', n - 1}}, 0});
  const auto rep = count_module(engine, adjoint_character(datum), datum->type().to_string(), "adjoint");
  const std::string suite = "sl" + std::to_string(n);
  for (int q : qs) {
    const FFCount c = ff_nilpotent_count(n, q);
    rows.push_back({suite, "total", q, "*", c.total, rep.n.evaluate(q)});
    for (const auto& [cls, count] : c.by_class) {
      std::vector<int> parts;
      for (const auto& tok : split(cls.substr(1, cls.size() - 2), ',')) parts.push_back(std::stoi(tok));
      Integer poly = 1;  // the zero orbit
      if (parts.front() > 1) {
        const JordanLabel label = jordan_to_stratum(parts);
        const Stratum* s = find_stratum(rep.strata, label.lambda, label.k);
        poly = s ? s->contribution.evaluate(q) : Integer(-1);
      }
      rows.push_back({suite, "jordan", q, cls, count, poly});
    }
  }
}

void verify_binary(const std::vector<int>& qs, StrataEngine& engine, std::vector<VerifyRow>& rows) {
  const auto datum = RootDatum::build(TypeSpec{{{'A', 1}}, 0});
  for (int d = 2; d <= 4; ++d) {
    const auto ch = highest_weight_character(datum, weight_from_coordinates(*datum, {Rational(d)}));
    const IntPolynomial n = nullcone_poly(engine, ch);
    for (int q : qs) rows.push_back({"binary", "d=" + std::to_string(d), q, "*", ff_binary_form_count(d, q).total, n.evaluate(q)});
  }
}

void verify_torus(const std::vector<int>& qs, StrataEngine& engine, std::vector<VerifyRow>& rows) {
  struct Case {
    const char* type;
    const char* weights;
  };
  const Case cases[] = {
      {"T1", "1;-1"},
      {"T1", "1;1;-2"},
      {"T2", "1,0;0,1;-1,-1"},
      {"T2", "1,0;-1,0;0,1;0,-1;1,1"},
  };
  for (const auto& c : cases) {
    const auto datum = RootDatum::build(TypeSpec::parse(c.type));
    std::vector<WeightEntry> w;
    for (const auto& tok : split(c.weights, ';')) w.push_back({weight_from_coordinates(*datum, parse_coords(tok)), 1});
    const ModuleCharacter ch(datum, w);
    const IntPolynomial n = nullcone_poly(engine, ch);
    for (int q : qs)
      rows.push_back({"torus", std::string(c.type) + ":" + c.weights, q, "*",
                      ff_torus_count(ch.weights(), datum->gram(), q).total, n.evaluate(q)});
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    const JobSpec job = parse_job(args, out);
    if (job.subcommand.empty()) return kOk;

    EngineOptions eo;
    eo.memo = job.memo;
    eo.threads = job.threads;
    eo.candidates.max_subset = job.subset_bound;
    StrataEngine engine(eo);
    std::string memo_path;
    if (const char* dir = std::getenv("NULLSTRATA_MEMO_DIR"); dir && *dir && job.memo) {
      std::filesystem::create_directories(dir);
      memo_path = (std::filesystem::path(dir) / "nullstrata-memo.tsv").string();
      for (const auto& [k, p] : load_memo_file(memo_path)) engine.memo_insert(k, p);
    }

    int code = kOk;
    if (job.subcommand == "verify") {
      std::vector<int> qs = job.q.empty() ? std::vector<int>{2, 3} : job.q;
      std::vector<VerifyRow> rows;
      if (job.suite == "sl2" || job.suite == "all") verify_nilpotent(2, qs, engine, rows);
      if (job.suite == "sl3" || job.suite == "all") verify_nilpotent(3, qs, engine, rows);
      if (job.suite == "binary" || job.suite == "all") verify_binary(qs, engine, rows);
      if (job.suite == "torus" || job.suite == "all") verify_torus(qs, engine, rows);
      bool all_ok = true;
      for (const auto& r : rows) all_ok = all_ok && r.ok();
      if (job.format == "tsv") {
        out << "suite\tcase\tq\tclass\toracle\tpolynomial\tstatus\n";
        for (const auto& r : rows)
          out << r.suite << '\t' << r.name << '\t' << r.q << '\t' << r.cls << '\t' << r.oracle << '\t' << r.poly << '\t'
              << (r.ok() ? "ok" : "MISMATCH") << '\n';
      } else {
        Json j;
        j["suite"] = job.suite;
        j["q"] = qs;
        Json list = Json::array();
        for (const auto& r : rows) {
          Json e;
          e["suite"] = r.suite;
          e["case"] = r.name;
          e["q"] = r.q;
          e["class"] = r.cls;
          e["oracle"] = to_json(r.oracle);
          e["polynomial"] = to_json(r.poly);
          e["ok"] = r.ok();
          list.push_back(e);
        }
        j["rows"] = list;
        j["ok"] = all_ok;
        out << j.dump(2) << '\n';
      }
      code = all_ok ? kOk : kMismatch;
    } else {
      const auto datum = RootDatum::build(
          TypeSpec::parse(job.type), job.lattice == "adjoint" ? CocharacterLattice::Adjoint : CocharacterLattice::SimplyConnected);
      if (job.subcommand == "roots") {
        if (job.format == "tsv") {
          out << "index\troot\tpositive\n";
          for (std::size_t i = 0; i < datum->roots().size(); ++i) {
            out << i << '\t';
            const auto& r = datum->roots()[i];
            for (Eigen::Index c = 0; c < r.size(); ++c) out << (c ? "," : "") << r[c];
            out << '\t' << (datum->is_positive(static_cast<int>(i)) ? 1 : 0) << '\n';
          }
        } else {
          out << to_json(*datum).dump(2) << '\n';
        }
      } else {
        const ModuleCharacter ch = build_module(datum, job.module);
        if (job.subcommand == "character") {
          if (job.format == "tsv") {
            out << "index\tweight\tmult\n";
            for (std::size_t i = 0; i < ch.weights().size(); ++i) {
              const auto c = datum->character_coordinates(ch.weights()[i].weight);
              out << i << '\t' << vec_key(c) << '\t' << ch.weights()[i].mult << '\n';
            }
          } else {
            Json j;
            j["type"] = datum->type().to_string();
            j["module"] = job.module;
            for (auto& [k, v] : to_json(ch).items()) j[k] = v;
            out << j.dump(2) << '\n';
          }
        } else if (job.subcommand == "strata") {
          const auto strata = engine.enumerate_strata(GroupState::ambient(datum), ch);
          if (job.format == "tsv") {
            out << "lambda\tk\tdim\tn\tN\tcontribution\n";
            for (const auto& s : strata) {
              for (Eigen::Index c = 0; c < s.lambda_coords.size(); ++c) out << (c ? "," : "") << s.lambda_coords[c];
              out << '\t' << s.k << '\t' << s.dim_stratum << '\t' << s.n << '\t' << s.N << '\t';
              for (std::size_t c = 0; c < s.contribution.coefficients().size(); ++c)
                out << (c ? "," : "") << s.contribution.coefficients()[c];
              out << '\n';
            }
          } else {
            Json j;
            j["type"] = datum->type().to_string();
            j["module"] = job.module;
            Json list = Json::array();
            for (const auto& s : strata) list.push_back(to_json(s, *datum));
            j["strata"] = list;
            out << j.dump(2) << '\n';
          }
        } else if (job.subcommand == "count") {
          const auto report = count_module(engine, ch, datum->type().to_string(), job.module);
          const auto checks = verify_identities(report, engine);
          bool checks_ok = report.n_at_1_ok && report.degree_ok;
          for (const auto& c : checks) checks_ok = checks_ok && c.pass;
          if (job.format == "tsv") {
            out << "quantity\tvalue\n";
            out << "n\t" << report.n.to_string() << '\n';
            out << "n_prime\t" << report.n_prime.to_string() << '\n';
            for (int q : job.eval) out << "n(" << q << ")\t" << report.n.evaluate(q) << '\n';
          } else {
            Json j = to_json(report, checks);
            if (!job.eval.empty()) {
              j["eval"] = job.eval;
              Json values = Json::array();
              for (int q : job.eval) values.push_back(to_json(report.n.evaluate(q)));
              j["values"] = values;
            }
            out << j.dump(2) << '\n';
          }
          if (!checks_ok) code = kMismatch;
        } else if (job.subcommand == "unipotent") {
          if (job.module != "adjoint") throw InputError("unipotent piece counts need --module adjoint");
          const auto report = count_module(engine, ch, datum->type().to_string(), job.module);
          const auto u = group_case_counts(report);
          Json j = to_json(u, *datum);
          if (!job.eval.empty()) {
            j["eval"] = job.eval;
            Json values = Json::array();
            for (int q : job.eval) values.push_back(to_json(u.total.evaluate(q)));
            j["values"] = values;
          }
          out << j.dump(2) << '\n';
          if (!u.steinberg_ok) code = kMismatch;
        } else if (job.subcommand == "blade") {
          std::vector<RVec> support;
          for (const auto& tok : split(job.support, ',')) {
            std::size_t idx = 0;
            try {
              idx = std::stoul(tok);
            } catch (const std::exception&) {
              throw InputError("bad support index '" + tok + "'");
            }
            if (idx >= ch.weights().size()) throw InputError("support index out of range: " + tok);
            support.push_back(ch.weights()[idx].weight);
          }
          const auto opt = torus_optimal(support, GroupState::ambient(datum));
          Json j;
          j["type"] = datum->type().to_string();
          j["module"] = job.module;
          j["semistable"] = opt.semistable;
          j["mu"] = rational_list(datum->cochar_coordinates(opt.mu));
          if (!opt.semistable) {
            j["lambda"] = rational_list(datum->cochar_coordinates(opt.lambda));
            j["m"] = opt.m.str();
            j["blade"] = rational_list(datum->cochar_coordinates(RVec(opt.lambda / opt.m)));
            j["dominant_blade"] =
                rational_list(datum->cochar_coordinates(RVec(make_dominant(*datum, opt.lambda).vector / opt.m)));
            j["norm2"] = Rational(opt.m * opt.m / datum->pairing(opt.lambda, opt.lambda)).str();
          }
          out << j.dump(2) << '\n';
        }
      }
    }
    if (!memo_path.empty()) save_memo_file(memo_path, engine.memo_snapshot());
    return code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const CapacityError& e) {
    err << "capacity exceeded: " << e.what() << '\n';
    return kCapacity;
  } catch (const InternalError& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kMismatch;
  }
}

}  // namespace nullstrata::cli
