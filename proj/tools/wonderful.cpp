#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <wonderful/wonderful.hpp>

using namespace wonderful;
using nlohmann::json;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_input(const std::string& flag_value, const char* what) {
  std::string text = flag_value;
  if (text.empty()) {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    if (text.find_first_not_of(" \t\r\n") == std::string::npos)
      throw UsageError(std::string("no ") + what + " given on the command line or stdin");
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("malformed JSON for ") + what + ": " + e.what());
  }
}

void print_poly_csv(const MultiPoly& p, std::ostream& os) {
  os << "q,y,z,num,den\n";
  for (const auto& [e, c] : p.terms())
    os << e[0] << ',' << e[1] << ',' << e[2] << ',' << c.get_num().get_str() << ',' << c.get_den().get_str() << '\n';
}

void print_series_csv(const EgfSeries& s, std::ostream& os) {
  os << "t,q,y,z,num,den,egf\n";
  for (int n = 0; n <= s.order(); ++n) {
    const MultiPoly e = s.egf_rational(n);
    for (const auto& [x, c] : s.coeff(n).terms())
      os << n << ',' << x[0] << ',' << x[1] << ',' << x[2] << ',' << c.get_num().get_str() << ','
         << c.get_den().get_str() << ',' << e.coefficient(x).get_str() << '\n';
  }
}

struct Mismatch {
  std::string where, expected, actual;
};

std::optional<Mismatch> compare_coeffs(const EgfSeries& a, const EgfSeries& b, int upto) {
  for (int i = 0; i <= upto; ++i)
    if (!(a.coeff(i) == b.coeff(i))) return Mismatch{"t^" + std::to_string(i), b.egf_rational(i).to_string(),
                                                     a.egf_rational(i).to_string()};
  return std::nullopt;
}

EgfSeries named_series(const std::string& name, int order) {
  if (name == "phi") return phi_series(order);
  if (name == "psi") return psi_series(order);
  if (name == "gamma") return gamma_series(order);
  if (name == "xi") return xi_series(order);
  if (name == "xitop") return xi_top_series(order);
  if (name == "phisuper") return phisuper_series(order);
  if (name == "eulerreal") return euler_real_series(order);
  if (name == "bigpsi") return bigpsi_formula(order);
  if (name == "w") return w_series(order);
  throw UsageError("unknown series '" + name + "'");
}

/// Formula against an independent enumeration, as far as the oracle reaches.
std::optional<Mismatch> compare_series(const std::string& name, const EgfSeries& s) {
  const int order = s.order();
  if (name == "phi") {
    for (int n = 2; n <= std::min(order, 8); ++n)
      if (!(s.egf(n) == poincare(Model::minimal, n)))
        return Mismatch{"n=" + std::to_string(n), poincare(Model::minimal, n).to_string(), s.egf(n).to_string()};
    return std::nullopt;
  }
  if (name == "psi" || name == "w") {
    for (int n = 2; n <= std::min(order, 7); ++n) {
      MultiPoly counts;
      for (const NestedSet& b : enumerate_B(n))
        counts += MultiPoly::z(static_cast<int>(b.size()) - 1);
      if (name == "psi") counts = counts * poincare(Model::minimal, n);
      const MultiPoly got = name == "psi" ? s.egf(n) : s.coeff(n);
      if (!(got == counts)) return Mismatch{"n=" + std::to_string(n), counts.to_string(), got.to_string()};
    }
    return std::nullopt;
  }
  if (name == "gamma") {
    const EgfSeries trees = tree_sum(psi_series(2 * order), order);
    const EgfSeries expected = MultiPoly::y() * trees;
    return compare_coeffs(s, expected, order);
  }
  if (name == "xi") return compare_coeffs(s, xi_direct(std::min(order, 6)), std::min(order, 6));
  if (name == "xitop") return compare_coeffs(s, xi_top_direct(std::min(order, 6)), std::min(order, 6));
  if (name == "phisuper" || name == "eulerreal") {
    for (int n = 2; n <= std::min(order, 6); ++n) {
      MultiPoly expected = poincare(Model::supermaximal, n);
      if (name == "eulerreal") expected = expected.eval_q(-1);
      if (!(s.egf(n) == expected)) return Mismatch{"n=" + std::to_string(n), expected.to_string(), s.egf(n).to_string()};
    }
    return std::nullopt;
  }
  if (name == "bigpsi") return compare_coeffs(s, bigpsi_direct(std::min(order, 8)), std::min(order, 8));
  throw UsageError("no oracle for series '" + name + "'");
}

void emit(const json& j, std::ostream& os) { os << j.dump() << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact combinatorics of wonderful models of the braid arrangement"};
  app.require_subcommand(1);

  int n = 0, n_max = 6, order = kDefaultOrder, k = 1;
  std::optional<int> size_filter, depth_filter;
  bool count_only = false, compare = false, any_pair = false;
  std::string model = "minimal", name, format = "json", perm, nested_in, partition_in, block_in, chain_in,
              labelled_in, seed_in, background_in, mode = "extended";

  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  };

  auto* nested = app.add_subcommand("nested", "Enumerate B(n-1)");
  nested->add_option("--n", n, "Ambient size")->required();
  nested->add_option("--size", size_filter, "Keep nested sets with this many blocks");
  nested->add_option("--depth", depth_filter, "Keep nested sets of this depth");
  nested->add_flag("--count", count_only, "Print only the count");
  add_format(nested);

  auto* bij = app.add_subcommand("bijection", "Nested set <-> set partition");
  bij->add_option("--n", n, "Ambient size")->required();
  bij->add_option("--nested", nested_in, "Nested set as JSON (default: read stdin)");
  bij->add_option("--partition", partition_in, "Partition as JSON {\"ground\",\"blocks\"}");

  auto* act = app.add_subcommand("action", "Extended action, labelled partitions and orbits");
  act->add_option("--n", n, "Ambient size")->required();
  act->add_option("--perm", perm, "Images sigma(0) .. sigma(n) (or of 1..m for --labelled)");
  act->add_option("--block", block_in, "Block as JSON");
  act->add_option("--nested", nested_in, "Nested set as JSON");
  act->add_option("--chain", chain_in, "Chain of nested sets as JSON");
  act->add_option("--labelled", labelled_in, "Labelled partition as JSON");
  bool orbit_flag = false;
  act->add_flag("--orbits", orbit_flag, "List orbits of F^k(B(n-1))");
  act->add_option("--k", k, "Codimension for --orbits");
  act->add_option("--mode", mode, "Orbit action")->check(CLI::IsMember({"natural", "extended", "restricted", "full"}));
  act->add_flag("--count", count_only, "Print only the orbit count");

  auto* clo = app.add_subcommand("closure", "Building closure inside B(n-1)");
  clo->add_option("--n", n, "Ambient size")->required();
  clo->add_option("--seed", seed_in, "Seed as a JSON array of nested sets (default: rank-one maximal strata)");
  clo->add_flag("--any-pair", any_pair, "Also unite pairs meeting only in V");
  clo->add_flag("--count", count_only, "Print only the size and whether it is all of B(n-1)");

  auto* basis = app.add_subcommand("basis", "Cohomology basis as JSON lines");
  basis->add_option("--n", n, "Ambient size")->required();
  basis->add_option("--model", model, "Model")->check(CLI::IsMember({"minimal", "maximal", "supermaximal"}));
  basis->add_option("--background", background_in, "Nested set S containing V (minimal model only)");
  basis->add_flag("--count", count_only, "Print only the number of elements");

  auto* poin = app.add_subcommand("poincare", "Poincare polynomial (q tracks H^2)");
  poin->add_option("--n", n, "Ambient size")->required();
  poin->add_option("--model", model, "Model")->check(CLI::IsMember({"minimal", "maximal", "supermaximal"}));
  add_format(poin);

  auto* ser = app.add_subcommand("series", "Generating series");
  ser->add_option("--name", name, "Series name")
      ->required()
      ->check(CLI::IsMember({"phi", "psi", "gamma", "xi", "xitop", "phisuper", "eulerreal", "bigpsi", "w"}));
  ser->add_option("--order", order, "Truncation order")->check(CLI::Range(1, 40));
  ser->add_flag("--compare", compare, "Check against the enumeration oracle");
  add_format(ser);

  auto* ver = app.add_subcommand("verify", "Run the verification suite");
  ver->add_option("--n-max", n_max, "Largest n")->check(CLI::Range(2, 8));
  ver->add_option("--order", order, "Series order")->check(CLI::Range(2, 12));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  std::ostream& out = std::cout;
  try {
    if (*nested) {
      std::size_t count = 0;
      std::ostringstream body;
      for (const NestedSet& s : enumerate_B(n)) {
        if (size_filter && static_cast<int>(s.size()) != *size_filter) continue;
        if (depth_filter && depth(s) != *depth_filter) continue;
        ++count;
        if (count_only) continue;
        if (format == "csv") {
          std::string line;
          for (const Block& b : s.blocks()) {
            std::string blk;
            for (int e : b.elements()) blk += (blk.empty() ? "" : " ") + std::to_string(e);
            line += (line.empty() ? "" : ";") + blk;
          }
          body << line << '\n';
        } else {
          emit(json_io::to_json(s), body);
        }
      }
      if (count_only)
        out << count << '\n';
      else
        out << body.str();
      return 0;
    }

    if (*bij) {
      json in = partition_in.empty() ? read_input(nested_in, "nested set or partition") : read_input(partition_in, "partition");
      if (in.is_object()) {
        NestedSet s = partition_to_nested(json_io::partition_from_json(in), n);
        emit(json_io::to_json(s), out);
      } else {
        emit(json_io::to_json(nested_to_partition(json_io::nested_from_json(in, n))), out);
      }
      return 0;
    }

    if (*act) {
      if (orbit_flag) {
        const auto orbs = orbits(n, k, parse_orbit_mode(mode));
        if (count_only) {
          out << orbs.size() << '\n';
          return 0;
        }
        json reps = json::array();
        for (const auto& o : orbs) reps.push_back(json_io::to_json(o.front()));
        emit(reps, out);
        return 0;
      }
      if (perm.empty()) throw UsageError("--perm is required unless --orbits is given");
      const auto images = json_io::parse_images(perm);
      if (!labelled_in.empty()) {
        LabelledPartition lp = json_io::labelled_partition_from_json(read_input(labelled_in, "labelled partition"));
        emit(json_io::to_json(act_labelled_partition(Permutation(images), lp)), out);
        return 0;
      }
      ExtPermutation sigma(images);
      if (!block_in.empty()) {
        emit(json_io::to_json(act_block(sigma, json_io::block_from_json(read_input(block_in, "block"), n))), out);
      } else if (!chain_in.empty()) {
        emit(json_io::to_json(act_chain(sigma, json_io::chain_from_json(read_input(chain_in, "chain"), n))), out);
      } else {
        emit(json_io::to_json(act_nested(sigma, json_io::nested_from_json(read_input(nested_in, "nested set"), n))),
             out);
      }
      return 0;
    }

    if (*clo) {
      std::vector<NestedSet> seed;
      if (seed_in.empty()) {
        seed = maximal_rank_one_seed(n);
      } else {
        json s = read_input(seed_in, "seed");
        if (!s.is_array()) throw UsageError("seed must be a JSON array of nested sets");
        for (const json& x : s) seed.push_back(json_io::nested_from_json(x, n));
      }
      const auto closed = building_closure(seed, n, any_pair ? UnionRule::any_pair : UnionRule::beyond_v);
      const bool everything = closed == enumerate_B(n);
      if (count_only) {
        emit({{"size", closed.size()}, {"equals_B", everything}}, out);
      } else {
        for (const NestedSet& s : closed) emit(json_io::to_json(s), out);
      }
      return 0;
    }

    if (*basis) {
      const Model m = parse_model(model);
      std::size_t count = 0;
      std::ostringstream body;
      if (m == Model::minimal) {
        NestedSet bg = background_in.empty() ? NestedSet::full(n)
                                             : json_io::nested_from_json(read_input(background_in, "background"), n);
        for (const auto& mono : enumerate_yuz(bg)) {
          ++count;
          if (!count_only) emit(json_io::to_json(mono), body);
        }
      } else {
        if (!background_in.empty()) throw UsageError("--background applies to the minimal model only");
        if (m == Model::maximal) {
          std::vector<SetPartition> bg{SetPartition::single_block(n)};
          for (const auto& mono : enumerate_yuz_maximal(bg, n)) {
            ++count;
            if (!count_only) emit(json_io::to_json(mono), body);
          }
        } else {
          for (const auto& e : enumerate_supermax_basis(n)) {
            ++count;
            if (!count_only) emit(json_io::to_json(e), body);
          }
        }
      }
      if (count_only)
        out << count << '\n';
      else
        out << body.str();
      return 0;
    }

    if (*poin) {
      const MultiPoly p = poincare(parse_model(model), n);
      if (format == "csv")
        print_poly_csv(p, out);
      else
        emit(json_io::to_json(p), out);
      return 0;
    }

    if (*ser) {
      const EgfSeries s = named_series(name, order);
      if (format == "csv")
        print_series_csv(s, out);
      else
        emit(json_io::to_json(s), out);
      if (compare) {
        if (auto m = compare_series(name, s)) {
          std::cerr << "mismatch at " << m->where << ": expected " << m->expected << ", got " << m->actual << '\n';
          return kExitMismatch;
        }
        std::cerr << "compare: ok\n";
      }
      return 0;
    }

    if (*ver) {
      VerifyOptions o;
      o.n_max = n_max;
      o.order = ver->count("--order") > 0 ? order : 8;
      const VerificationReport r = run_verification(o);
      out << r.to_json().dump(2) << '\n';
      return r.overall() ? 0 : kExitMismatch;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const validation_error& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const wonderful::domain_error& e) {
    std::cerr << "out of domain: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const internal_error& e) {
    std::cerr << "internal check failed: " << e.what() << '\n';
    return kExitMismatch;
  }
  return 0;
}
