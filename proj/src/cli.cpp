#include "latquot/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "latquot/catalog.hpp"
#include "latquot/congruence.hpp"
#include "latquot/error.hpp"
#include "latquot/io.hpp"
#include "latquot/variety.hpp"

namespace latquot::cli {

namespace {

using json = nlohmann::json;

struct Options {
  std::string class_name = "distributive";
  std::string identities_file;
  std::size_t max_con = kDefaultEnumerationCap;
  bool json = false;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

class Runner {
 public:
  Runner(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  int info(const std::string& input, const Options& opt) {
    const auto named = load(input);
    const Lattice& l = named.lattice;
    const bool dist = is_distributive(l), mod = is_modular(l);
    std::optional<std::size_t> con;
    if (l.size() <= opt.max_con) con = all_congruences(l, opt.max_con).size();
    if (opt.json) {
      json j{{"size", l.size()}, {"covers", l.covers().size()},
             {"distributive", dist}, {"modular", mod}};
      j["congruences"] = con ? json(*con) : json(nullptr);
      out_ << j.dump(2) << "\n";
      return kSuccess;
    }
    out_ << "size=" << l.size() << " distributive=" << yes_no(dist) << " modular=" << yes_no(mod);
    if (con) out_ << " |Con|=" << *con;
    out_ << "\ncovers=" << l.covers().size() << "\n";
    return kSuccess;
  }

  int delta(const std::string& input, const Options& opt) {
    const auto named = load(input);
    const Lattice& l = named.lattice;
    const ClassSpec spec = resolve_class(opt);
    const Congruence k = kappa(l, spec);
    const auto q = quotient(l, k);
    const auto gen = principal_generator(l, k);
    if (opt.json) {
      json j{{"class", spec.name()}, {"kappa", format_congruence(l, k)},
             {"blocks", k.block_count()}, {"quotient_size", q.target.size()}};
      j["principal"] = gen ? json::array({l.id(gen->first), l.id(gen->second)}) : json(nullptr);
      out_ << j.dump(2) << "\n";
      return kSuccess;
    }
    out_ << "class: " << spec.name() << "\n";
    out_ << "kappa: " << format_congruence(l, k) << "\n";
    out_ << "blocks: " << k.block_count() << "\n";
    out_ << "quotient-size: " << q.target.size() << "\n";
    out_ << "principal: ";
    if (gen) {
      out_ << "(" << l.id(gen->first) << "," << l.id(gen->second) << ")";
      const auto hi = label_of(named, gen->first), lo = label_of(named, gen->second);
      if ((hi && *hi != l.id(gen->first)) || (lo && *lo != l.id(gen->second)))
        out_ << " = (" << hi.value_or(l.id(gen->first)) << "," << lo.value_or(l.id(gen->second))
             << ")";
    } else {
      out_ << "none";
    }
    out_ << "\n";
    if (q.target.size() == 1 && l.size() > 1) {
      out_ << "note: the quotient collapses to a single element\n";
    }
    return kSuccess;
  }

  int quotient_cmd(const std::string& input, const std::string& which, const Options& opt) {
    const auto named = load(input);
    const Congruence theta = resolve_congruence(named.lattice, which, opt);
    const Lattice target = quotient(named.lattice, theta).target;
    if (opt.json) {
      out_ << lattice_json(target).dump(2) << "\n";
    } else {
      out_ << format_lattice_text(target);
    }
    return kSuccess;
  }

  int product_cmd(const std::string& a, const std::string& b, const Options& opt) {
    const Lattice p = product(load(a).lattice, load(b).lattice);
    if (opt.json) {
      out_ << lattice_json(p).dump(2) << "\n";
    } else {
      out_ << format_lattice_text(p);
    }
    return kSuccess;
  }

  int congruences(const std::string& input, const Options& opt) {
    const auto named = load(input);
    const auto all = all_congruences(named.lattice, opt.max_con);
    if (opt.json) {
      json list = json::array();
      for (const auto& c : all) list.push_back(format_congruence(named.lattice, c));
      out_ << json{{"count", all.size()}, {"congruences", list}}.dump(2) << "\n";
      return kSuccess;
    }
    out_ << "count=" << all.size() << "\n";
    for (const auto& c : all) out_ << format_congruence(named.lattice, c) << "\n";
    return kSuccess;
  }

  int check(int theorem, const std::vector<std::string>& inputs, const Options& opt) {
    const ClassSpec spec = resolve_class(opt);
    std::vector<CheckReport> reports;
    switch (theorem) {
      case 1: {
        require_inputs(inputs, 1, theorem);
        reports.push_back(verify_theorem1(load(inputs[0]).lattice, spec, opt.max_con));
        break;
      }
      case 2: {
        require_inputs(inputs, 1, theorem);
        const Lattice l = load(inputs[0]).lattice;
        std::vector<Congruence> thetas;
        if (l.size() <= opt.max_con) {
          thetas = all_congruences(l, opt.max_con);
        } else {
          for (const auto& [lo, hi] : l.covers()) {
            auto theta = principal_congruence(l, lo, hi);
            if (std::find(thetas.begin(), thetas.end(), theta) == thetas.end())
              thetas.push_back(std::move(theta));
          }
        }
        for (const auto& theta : thetas) {
          reports.push_back(verify_theorem2(l, theta, spec));
          reports.back().notes.push_back("theta=" + format_congruence(l, theta));
        }
        break;
      }
      case 3: {
        require_inputs(inputs, 2, theorem);
        reports.push_back(
            verify_theorem3(load(inputs[0]).lattice, load(inputs[1]).lattice, spec, opt.max_con));
        break;
      }
      default:
        throw Error(ErrorKind::InvalidArgument, "--theorem must be 1, 2 or 3");
    }

    bool passed = true;
    for (const auto& r : reports) passed = passed && r.passed;
    if (opt.json) {
      json list = json::array();
      for (const auto& r : reports)
        list.push_back({{"name", r.name}, {"passed", r.passed}, {"checks", r.checks},
                        {"violations", r.violations}, {"notes", r.notes}});
      out_ << json{{"theorem", theorem}, {"passed", passed}, {"reports", list}}.dump(2) << "\n";
    } else {
      for (const auto& r : reports) {
        out_ << (r.passed ? "PASS " : "FAIL ") << r.name << " checks=" << r.checks;
        for (const auto& note : r.notes) out_ << " " << note;
        out_ << "\n";
        for (const auto& v : r.violations) out_ << "  violation: " << v << "\n";
      }
      out_ << "theorem " << theorem << ": " << (passed ? "PASS" : "FAIL") << " ("
           << reports.size() << (reports.size() == 1 ? " run" : " runs") << ")\n";
    }
    return passed ? kSuccess : kCheckFailed;
  }

  int dot(const std::string& input, const std::string& highlight, const Options& opt) {
    const auto named = load(input);
    std::optional<Congruence> theta;
    if (!highlight.empty()) theta = resolve_congruence(named.lattice, highlight, opt);
    out_ << to_dot(named.lattice, theta);
    return kSuccess;
  }

  int catalog(const std::string& action, const std::string& name, const Options& opt) {
    if (action == "list") {
      if (opt.json) {
        out_ << json{{"names", catalog_names()}}.dump(2) << "\n";
      } else {
        for (const auto& n : catalog_names()) out_ << n << "\n";
      }
      return kSuccess;
    }
    if (action == "dump") {
      if (name.empty()) throw Error(ErrorKind::InvalidArgument, "catalog dump needs a name");
      const auto named = catalog_lookup(name);
      if (opt.json) {
        auto j = lattice_json(named.lattice);
        json labels = json::object();
        for (const auto& [label, index] : named.distinguished) labels[label] = named.lattice.id(index);
        j["distinguished"] = labels;
        out_ << j.dump(2) << "\n";
      } else {
        out_ << format_lattice_text(named.lattice);
      }
      return kSuccess;
    }
    throw Error(ErrorKind::InvalidArgument, "catalog action must be 'list' or 'dump'");
  }

 private:
  NamedLattice load(const std::string& input) {
    if (input.starts_with("catalog:")) return catalog_lookup(input.substr(8));
    std::string text;
    if (input == "-") {
      text.assign(std::istreambuf_iterator<char>(in_), {});
    } else {
      text = read_file(input);
    }
    return NamedLattice{input, parse_lattice_text(text), {}};
  }

  static std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << file.rdbuf();
    return ss.str();
  }

  static ClassSpec resolve_class(const Options& opt) {
    if (!opt.identities_file.empty()) {
      return ClassSpec::parse(read_file(opt.identities_file), opt.identities_file);
    }
    return ClassSpec::by_name(opt.class_name);
  }

  static Congruence resolve_congruence(const Lattice& l, const std::string& which,
                                       const Options& opt) {
    if (which == "delta") return latquot::delta(l);
    if (which == "kappa") return kappa(l, resolve_class(opt));
    return parse_congruence(l, which);
  }

  static void require_inputs(const std::vector<std::string>& inputs, std::size_t n, int theorem) {
    if (inputs.size() != n) {
      throw Error(ErrorKind::InvalidArgument, "theorem " + std::to_string(theorem) + " takes " +
                                                  std::to_string(n) + " lattice input(s)");
    }
  }

  static std::optional<std::string> label_of(const NamedLattice& named, Index x) {
    for (const auto& [label, index] : named.distinguished)
      if (index == x) return label;
    return std::nullopt;
  }

  static json lattice_json(const Lattice& l) {
    json covers = json::array();
    for (const auto& [lo, hi] : l.covers()) covers.push_back({l.id(lo), l.id(hi)});
    return json{{"elements", l.elements()}, {"covers", covers}};
  }

  std::istream& in_;
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Finite lattices: congruences, quotients and least class congruences", "latquot"};
  app.require_subcommand(1, 1);

  Options opt;
  std::string input, second, which, highlight, action, name;
  std::vector<std::string> inputs;
  int theorem = 0;

  auto add_class = [&](CLI::App* sub) {
    auto* cls = sub->add_option("--class", opt.class_name, "distributive or modular");
    sub->add_option("--identities", opt.identities_file, "file with one identity per line")
        ->excludes(cls);
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--max-con", opt.max_con, "congruence enumeration cap");
    sub->add_flag("--json", opt.json, "machine-readable output");
  };

  auto* info = app.add_subcommand("info", "size, distributivity, modularity, |Con|");
  info->add_option("lattice", input)->required();
  add_common(info);

  auto* delta = app.add_subcommand("delta", "least congruence with a quotient in the class");
  delta->add_option("lattice", input)->required();
  add_class(delta);
  add_common(delta);

  auto* kappa = app.add_subcommand("kappa", "alias of delta");
  kappa->add_option("lattice", input)->required();
  add_class(kappa);
  add_common(kappa);

  auto* quot = app.add_subcommand("quotient", "print a quotient lattice");
  quot->add_option("lattice", input)->required();
  quot->add_option("congruence", which, "block notation, 'delta' or 'kappa'")->required();
  add_class(quot);
  add_common(quot);

  auto* prod = app.add_subcommand("product", "print the product of two lattices");
  prod->add_option("left", input)->required();
  prod->add_option("right", second)->required();
  add_common(prod);

  auto* cons = app.add_subcommand("congruences", "list every congruence");
  cons->add_option("lattice", input)->required();
  add_common(cons);

  auto* check = app.add_subcommand("check", "verify the filter theorems");
  check->add_option("--theorem", theorem, "1, 2 or 3")->required();
  check->add_option("lattices", inputs)->required();
  add_class(check);
  add_common(check);

  auto* dot = app.add_subcommand("dot", "Hasse diagram in Graphviz DOT");
  dot->add_option("lattice", input)->required();
  dot->add_option("--highlight", highlight, "block notation, 'delta' or 'kappa'");
  add_class(dot);
  add_common(dot);

  auto* cat = app.add_subcommand("catalog", "list or dump built-in lattices");
  cat->add_option("action", action, "list or dump")->required();
  cat->add_option("name", name);
  add_common(cat);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  Runner runner(in, out);
  try {
    if (info->parsed()) return runner.info(input, opt);
    if (delta->parsed() || kappa->parsed()) return runner.delta(input, opt);
    if (quot->parsed()) return runner.quotient_cmd(input, which, opt);
    if (prod->parsed()) return runner.product_cmd(input, second, opt);
    if (cons->parsed()) return runner.congruences(input, opt);
    if (check->parsed()) return runner.check(theorem, inputs, opt);
    if (dot->parsed()) return runner.dot(input, highlight, opt);
    if (cat->parsed()) return runner.catalog(action, name, opt);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::SizeLimitExceeded ? kSizeLimit : kInputError;
  }
  return kInputError;
}

}  // namespace latquot::cli
