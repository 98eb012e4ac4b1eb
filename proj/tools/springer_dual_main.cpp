#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sdual/exceptional.hpp"
#include "sdual/json_io.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace sdual;

namespace {

struct CommonOpts {
  std::string group = "Sp";
  std::string lambda;
  std::string eps;
  std::string degenerate;
  std::string format = "pretty";
  std::string out;
};

std::vector<Int> parse_int_list(const std::string& s) {
  std::vector<Int> v;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    v.push_back(std::stoll(tok));
  }
  return v;
}

// value-indexed sign list: "2=+1,4=-1" (also accepts "2=+" / "2=-")
std::map<Int, int> parse_eps(const std::string& s) {
  std::map<Int, int> eps;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    auto pos = tok.find('=');
    if (pos == std::string::npos)
      throw DomainError("eps entries look like VALUE=+1 or VALUE=-1: " + tok);
    Int v = std::stoll(tok.substr(0, pos));
    std::string sign = tok.substr(pos + 1);
    if (sign == "+1" || sign == "+" || sign == "1")
      eps[v] = 1;
    else if (sign == "-1" || sign == "-")
      eps[v] = -1;
    else
      throw DomainError("bad sign '" + sign + "' for value " +
                        std::to_string(v));
  }
  return eps;
}

MarkedPartition marked_from_opts(const CommonOpts& o) {
  DegTag tag = DegTag::None;
  if (o.degenerate == "plus") tag = DegTag::Plus;
  else if (o.degenerate == "minus") tag = DegTag::Minus;
  else if (!o.degenerate.empty())
    throw DomainError("--degenerate takes 'plus' or 'minus'");
  return MarkedPartition(group_from_string(o.group),
                         Partition(parse_int_list(o.lambda)),
                         parse_eps(o.eps), tag);
}

void emit(const CommonOpts& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream f(o.out);
    if (!f) throw DomainError("cannot open output file " + o.out);
    f << text;
    if (!text.empty() && text.back() != '\n') f << "\n";
  }
}

std::string pretty_pair(const MarkedPartition& m) {
  return m.to_string();
}

int env_threads() {
  if (const char* s = std::getenv("SPRINGER_DUAL_THREADS")) {
    int t = std::atoi(s);
    if (t >= 1) return t;
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void add_pair_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--group", o.group, "Sp or SO")->required();
  cmd->add_option("--lambda", o.lambda, "comma list, e.g. 3,3,1")->required();
  cmd->add_option("--eps", o.eps, "value-indexed signs, e.g. 2=+1,4=-1");
  cmd->add_option("--degenerate", o.degenerate,
                  "plus or minus for degenerate SO orbits");
}

void add_io_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--format", o.format, "json, tsv or pretty");
  cmd->add_option("--out", o.out, "write output to FILE");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "springer-dual: nilpotent-orbit duals of tempered parameters for "
      "Sp(2n,C) and SO(N,C)"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string az_input, az_json, dump_p;
  Int max_size = 8;
  std::vector<std::string> exc_args;
  bool exc_all = false;

  CLI::App* gsc = app.add_subcommand(
      "gsc", "generalized Springer datum (family key and bipartition)");
  add_pair_flags(gsc, o);
  add_io_flags(gsc, o);

  CLI::App* mx = app.add_subcommand("max", "support-maximal constituent");
  add_pair_flags(mx, o);
  add_io_flags(mx, o);

  CLI::App* mn = app.add_subcommand("min", "sign-twisted minimal constituent");
  add_pair_flags(mn, o);
  add_io_flags(mn, o);

  CLI::App* du = app.add_subcommand(
      "dual", "Iwahori-Matsumoto dual orbit datum of a tempered parameter");
  add_pair_flags(du, o);
  add_io_flags(du, o);

  CLI::App* az = app.add_subcommand(
      "az", "Aubert-Zelevinsky dual orbit for tempered unipotent SO(2n+1)");
  az->add_option("--input", az_input, "JSON file ('-' for stdin)");
  az->add_option("--json", az_json, "inline JSON");
  add_io_flags(az, o);

  CLI::App* exc = app.add_subcommand(
      "exceptional", "Appendix table lookup: GROUP [ORBIT EPS]");
  exc->add_option("args", exc_args, "GROUP [ORBIT EPS]");
  exc->add_flag("--all", exc_all, "print the whole group table");
  add_io_flags(exc, o);

  CLI::App* tb = app.add_subcommand(
      "table", "all pairs of a group up to --max-size with images and duals");
  tb->add_option("--group", o.group, "Sp or SO")->required();
  tb->add_option("--max-size", max_size, "largest 2n resp. N");
  add_io_flags(tb, o);

  CLI::App* vf = app.add_subcommand(
      "verify", "certify the max/min theorems against the Green functions");
  vf->add_option("--group", o.group, "Sp, SO or A")->required();
  vf->add_option("--max-size", max_size, "largest 2n resp. N resp. n");
  vf->add_option("--dump-p", dump_p, "write P at t=1 as TSV to FILE");
  add_io_flags(vf, o);

  CLI11_PARSE(app, argc, argv);

  try {
    if (gsc->parsed()) {
      MarkedPartition m = marked_from_opts(o);
      auto [key, bip] = gsc_forward(m);
      Symbol s = marked_symbol(m);
      if (o.format == "json") {
        Json j{{"family", to_json(key)},
               {"bipartition", to_json(bip)},
               {"symbol", to_json(s)}};
        emit(o, j.dump(2));
      } else {
        std::ostringstream os;
        os << pretty_pair(m) << " -> " << key.to_string() << " "
           << bip.to_string() << "\n  symbol " << s.to_string();
        emit(o, os.str());
      }
    } else if (mx->parsed() || mn->parsed() || du->parsed()) {
      MarkedPartition m = marked_from_opts(o);
      MarkedPartition r = mx->parsed() ? max_marked(m) : min_marked(m);
      auto [key, bip] = gsc_forward(r);
      if (o.format == "json") {
        Json j = to_json(r);
        j["defect"] = key.defect;
        if (du->parsed())
          j["degenerate_resolved"] = !r.degenerate() ? Json(true) : Json(false);
        emit(o, j.dump(2));
      } else {
        std::ostringstream os;
        os << pretty_pair(m) << " -> " << pretty_pair(r) << " (defect "
           << key.defect << ")";
        if (du->parsed() && r.degenerate())
          os << " [orbit pair only: degenerate tag not resolved]";
        emit(o, os.str());
      }
    } else if (az->parsed()) {
      std::string text;
      if (!az_json.empty()) {
        text = az_json;
      } else if (az_input == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
      } else if (!az_input.empty()) {
        std::ifstream f(az_input);
        if (!f) throw DomainError("cannot open " + az_input);
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
      } else {
        throw DomainError("az needs --input FILE or --json STRING");
      }
      Json j;
      try {
        j = Json::parse(text);
      } catch (const Json::parse_error& e) {
        throw DomainError(std::string("malformed JSON: ") + e.what());
      }
      DualOrbit d = az_dual(unipotent_from_json(j));
      if (o.format == "json") {
        emit(o, to_json(d).dump(2));
      } else {
        std::ostringstream os;
        os << "dual orbit " << d.lambda.to_string() << " eps{";
        bool first = true;
        for (auto& [v, s] : d.merged_eps) {
          os << (first ? "" : ",") << v << (s > 0 ? "+" : "-");
          first = false;
        }
        os << "}";
        if (!d.conflicts.empty()) {
          os << " CONFLICTS on values:";
          for (Int v : d.conflicts) os << " " << v;
        }
        os << " (orbit only)";
        emit(o, os.str());
      }
    } else if (exc->parsed()) {
      auto row_tsv = [](const ExcEntry& r) {
        return r.group + "\t" + r.orbit + "\t" + r.a_group + "\t" + r.eps +
               "\t" + r.dual_orbit + "\t" + r.dual_a_group + "\t" + r.dual_eps;
      };
      auto row_json = [](const ExcEntry& r) {
        return Json{{"group", r.group},
                    {"orbit", r.orbit},
                    {"a_group", r.a_group},
                    {"eps", r.eps},
                    {"dual_orbit", r.dual_orbit},
                    {"dual_a_group", r.dual_a_group},
                    {"dual_eps", r.dual_eps}};
      };
      if (exc_all || exc_args.size() == 1) {
        if (exc_args.empty())
          throw DomainError("exceptional needs a group (G2, F4, E6, E7, E8)");
        auto rows = exceptional_group(exc_args[0]);
        if (o.format == "json") {
          Json j = Json::array();
          for (const auto& r : rows) j.push_back(row_json(r));
          emit(o, j.dump(2));
        } else {
          std::ostringstream os;
          for (const auto& r : rows) os << row_tsv(r) << "\n";
          emit(o, os.str());
        }
      } else if (exc_args.size() == 3) {
        const ExcEntry& r =
            exceptional_lookup(exc_args[0], exc_args[1], exc_args[2]);
        if (o.format == "json")
          emit(o, row_json(r).dump(2));
        else
          emit(o, row_tsv(r));
      } else {
        throw DomainError("exceptional takes GROUP, or GROUP ORBIT EPS");
      }
    } else if (tb->parsed()) {
      GroupKind g = group_from_string(o.group);
      std::ostringstream os;
      Json rows = Json::array();
      for (Int size = g == GroupKind::Sp ? 0 : 1; size <= max_size;
           size += g == GroupKind::Sp ? 2 : 1) {
        for (const auto& m : enumerate_marked(g, size)) {
          auto [key, bip] = gsc_forward(m);
          MarkedPartition d = min_marked(m);
          if (o.format == "json") {
            rows.push_back(Json{{"pair", to_json(m)},
                                {"family", to_json(key)},
                                {"bipartition", to_json(bip)},
                                {"dual", to_json(d)}});
          } else {
            os << pretty_pair(m) << "\t" << key.to_string() << "\t"
               << bip.to_string() << "\t" << pretty_pair(d) << "\n";
          }
        }
      }
      emit(o, o.format == "json" ? rows.dump(2) : os.str());
    } else if (vf->parsed()) {
      int threads = env_threads();
      VerifyReport r;
      if (o.group == "A" || o.group == "a")
        r = verify_type_a(max_size, threads);
      else
        r = verify_theorems(group_from_string(o.group), max_size, threads);
      if (!dump_p.empty() && o.group != "A" && o.group != "a") {
        std::ofstream f(dump_p);
        if (!f) throw DomainError("cannot open " + dump_p);
        GroupKind g = group_from_string(o.group);
        for (Int size = g == GroupKind::Sp ? 0 : 1; size <= max_size;
             size += g == GroupKind::Sp ? 2 : 1)
          for (const auto& key : families(g, size)) {
            const FamilySolve& fs = solve_family(key);
            for (size_t i = 0; i < fs.members.size(); ++i)
              for (size_t j = 0; j < fs.members.size(); ++j)
                if (!fs.P[i][j].is_zero())
                  f << key.to_string() << "\t"
                    << fs.members[i].pair.to_string() << "\t"
                    << fs.members[j].pair.to_string() << "\t"
                    << fs.P[i][j].eval(1) << "\n";
          }
      }
      if (o.format == "json") {
        emit(o, to_json(r).dump(2));
      } else {
        std::ostringstream os;
        os << r.group << " up to size " << r.max_size << ": " << r.families
           << " families, " << r.pairs << " pairs, "
           << (r.ok() ? "all families pass" : "FAILURES") << " ("
           << r.seconds << "s)\n";
        for (const auto& s : r.issues) os << "  counterexample: " << s << "\n";
        emit(o, os.str());
      }
      if (!r.ok()) return 2;
    }
    return 0;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
