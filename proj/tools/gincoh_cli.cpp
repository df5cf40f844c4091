// gincoh command-line front end. Everything mathematical goes through the C API.
#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gincoh/gincoh.h"

using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kUsage = 2, kCapacity = 3, kConsistency = 4 };

int exit_code(gincoh_status s) {
  switch (s) {
    case GINCOH_OK: return kOk;
    case GINCOH_E_PARSE:
    case GINCOH_E_INVALID_ARGUMENT:
    case GINCOH_E_AMBIENT_MISMATCH:
    case GINCOH_E_NOT_SQUAREFREE:
    case GINCOH_E_IO: return kUsage;
    case GINCOH_E_CAPACITY: return kCapacity;
    default: return kConsistency;
  }
}

struct Failure {
  int code;
  std::string message;
};

struct Context {
  gincoh_context* ctx = nullptr;
  Context() {
    if (gincoh_context_new(&ctx) != GINCOH_OK) throw Failure{kCapacity, "cannot allocate a context"};
  }
  ~Context() { gincoh_context_free(ctx); }
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;

  void check(gincoh_status s) const {
    if (s != GINCOH_OK)
      throw Failure{exit_code(s), std::string("[") + gincoh_status_name(s) + "] " + gincoh_last_error(ctx)};
  }
};

struct IdealDeleter {
  void operator()(gincoh_ideal* p) const { gincoh_ideal_free(p); }
};
struct ComplexDeleter {
  void operator()(gincoh_complex* p) const { gincoh_complex_free(p); }
};
using IdealPtr = std::unique_ptr<gincoh_ideal, IdealDeleter>;
using ComplexPtr = std::unique_ptr<gincoh_complex, ComplexDeleter>;

// Takes ownership of a library string.
std::string take(char* s) {
  std::string out = s ? s : "";
  gincoh_string_free(s);
  return out;
}

struct Options {
  std::optional<std::uint64_t> seed;
  std::string format = "json";
  std::string cache_dir;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kUsage, "[E_IO] cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Input {
  IdealPtr ideal;
  ComplexPtr complex;
};

// An input carrying "facets" is a complex; anything else is read as an ideal
// (which also produces the library's parse diagnostics).
Input load(const Context& c, const std::string& path) {
  const std::string text = read_file(path);
  const json probe = json::parse(text, nullptr, false);
  Input in;
  if (!probe.is_discarded() && probe.is_object() && probe.contains("facets")) {
    gincoh_complex* p = nullptr;
    c.check(gincoh_complex_from_json(c.ctx, text.c_str(), &p));
    in.complex.reset(p);
  } else {
    gincoh_ideal* p = nullptr;
    c.check(gincoh_ideal_from_json(c.ctx, text.c_str(), &p));
    in.ideal.reset(p);
  }
  return in;
}

Input load_complex(const Context& c, const std::string& path) {
  Input in = load(c, path);
  if (!in.complex) throw Failure{kUsage, "[E_INVALID_ARGUMENT] " + path + " is not a complex (no \"facets\")"};
  return in;
}

Input load_ideal(const Context& c, const std::string& path) {
  Input in = load(c, path);
  if (!in.ideal) throw Failure{kUsage, "[E_INVALID_ARGUMENT] " + path + " is not an ideal (no \"generators\")"};
  return in;
}

// "a..b" with optional signs.
gincoh_window parse_window(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) throw std::invalid_argument(s);
    std::size_t used = 0;
    const std::string a = s.substr(0, dots), b = s.substr(dots + 2);
    gincoh_window w{std::stoi(a, &used), 0};
    if (used != a.size()) throw std::invalid_argument(a);
    w.hi = std::stoi(b, &used);
    if (used != b.size()) throw std::invalid_argument(b);
    if (w.lo > w.hi) throw std::invalid_argument(s);
    return w;
  } catch (const std::exception&) {
    throw Failure{kUsage, "[E_INVALID_ARGUMENT] window must look like a..b with a <= b, got \"" + s + "\""};
  }
}

std::optional<gincoh_window> optional_window(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return parse_window(s);
}

bool is_table(const json& j) {
  return j.is_object() && (j.contains("entries") || j.contains("modules") || (j.contains("values") && j.contains("window")));
}

std::string tsv(const Context& c, const json& table) {
  char* out = nullptr;
  c.check(gincoh_render_tsv(c.ctx, table.dump().c_str(), &out));
  return take(out);
}

// Named tables inside a result document, in a fixed order.
std::vector<std::pair<std::string, json>> tables_of(const json& doc) {
  std::vector<std::pair<std::string, json>> out;
  if (is_table(doc)) out.emplace_back("table", doc);
  for (const char* key : {"table", "oracle"})
    if (doc.contains(key) && is_table(doc[key])) out.emplace_back(key, doc[key]);
  if (doc.contains("tables"))
    for (const char* key : {"left", "right"})
      if (is_table(doc["tables"][key])) out.emplace_back(key, doc["tables"][key]);
  return out;
}

std::string scalar(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void pretty(const Context& c, const json& j, const std::string& indent, std::ostream& os) {
  for (const auto& [key, value] : j.items()) {
    if (is_table(value)) {
      os << indent << key << ":\n";
      std::istringstream lines(tsv(c, value));
      for (std::string line; std::getline(lines, line);) os << indent << "  " << line << "\n";
    } else if (value.is_object()) {
      os << indent << key << ":\n";
      pretty(c, value, indent + "  ", os);
    } else if (value.is_array() && std::all_of(value.begin(), value.end(), [](const json& v) { return v.is_primitive(); })) {
      std::string joined;
      for (const auto& v : value) joined += (joined.empty() ? "" : ", ") + scalar(v);
      os << indent << key << ": [" << joined << "]\n";
    } else if (value.is_array()) {
      os << indent << key << ":\n";
      for (const auto& v : value) os << indent << "  - " << v.dump() << "\n";
    } else {
      os << indent << key << ": " << scalar(value) << "\n";
    }
  }
}

struct Run {
  const Options& opts;
  Context c;
  bool seed_from_entropy = false;

  explicit Run(const Options& o) : opts(o) {
    if (opts.seed) c.check(gincoh_context_set_seed(c.ctx, *opts.seed));
    seed_from_entropy = !opts.seed;
    if (!opts.cache_dir.empty()) c.check(gincoh_context_set_cache_dir(c.ctx, opts.cache_dir.c_str()));
  }

  // Writes `body` (a JSON document from the library) in the chosen format.
  // Commands that draw random coordinates get the seed in the header.
  void print(const std::string& command, const std::string& body, bool random) {
    json doc = json::parse(body);
    json header = {{"tool", "gincoh"}, {"version", gincoh_version()}, {"command", command}};
    if (random) {
      std::uint64_t seed = 0;
      c.check(gincoh_context_get_seed(c.ctx, &seed));
      header["seed"] = seed;
      header["seed_source"] = seed_from_entropy ? "entropy" : "flag";
    }
    if (opts.format == "json") {
      doc["header"] = header;
      std::cout << doc.dump(2) << "\n";
      return;
    }
    if (random) std::cout << "# seed " << header["seed"].get<std::uint64_t>() << " (" << scalar(header["seed_source"]) << ")\n";
    if (opts.format == "tsv") {
      const auto tables = tables_of(doc);
      if (tables.empty()) throw Failure{kUsage, "[E_INVALID_ARGUMENT] " + command + " has no table to render as tsv"};
      for (const auto& [name, t] : tables) {
        if (tables.size() > 1) std::cout << "# " << name << "\n";
        std::cout << tsv(c, t);
      }
      return;
    }
    std::cout << "# gincoh " << gincoh_version() << " " << command << "\n";
    pretty(c, doc, "", std::cout);
  }

  // Like check, but a report that came back with a violation is printed first.
  void check_report(const std::string& command, gincoh_status s, char* out, bool random) {
    if (out != nullptr) print(command, take(out), random);
    c.check(s);
  }
};

gincoh_route route_of(const std::string& name, const Input& in) {
  if (name == "filtration") return GINCOH_ROUTE_FILTRATION;
  if (name == "cech") return GINCOH_ROUTE_CECH;
  if (name == "enrico") return GINCOH_ROUTE_ENRICO;
  if (name == "enrico-printed") return GINCOH_ROUTE_ENRICO_PRINTED;
  // auto: the exact oracle whenever the input is monomial.
  if (in.complex) return GINCOH_ROUTE_CECH;
  return GINCOH_ROUTE_FILTRATION;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generic initial ideals, local cohomology and sequentially Cohen-Macaulay tests"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(gincoh_version()));

  Options opts;
  app.add_option("--seed", opts.seed, "64-bit seed for random coordinates (default: drawn from entropy)");
  app.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"json", "tsv", "pretty"}));
  app.add_option("--cache-dir", opts.cache_dir, "Gin cache directory (overrides $GINCOH_CACHE_DIR)");

  std::string path, window, route = "auto";
  bool oracle = false;

  auto* gin = app.add_subcommand("gin", "Generic initial ideal with seed and strong-stability certificate");
  gin->add_option("input", path, "Ideal JSON")->required();

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of R/I on a window");
  hilbert->add_option("input", path, "Ideal JSON")->required();
  hilbert->add_option("--window", window, "Degrees a..b")->required();

  auto* betti = app.add_subcommand("betti", "Graded Betti numbers of R/I or K[Delta]");
  betti->add_option("input", path, "Ideal or complex JSON")->required();
  betti->add_flag("--oracle", oracle, "Use the Koszul-complex oracle");

  auto* localcoh = app.add_subcommand("localcoh", "Hilbert functions of the local cohomology modules");
  localcoh->add_option("input", path, "Ideal or complex JSON")->required();
  localcoh->add_option("--route", route, "filtration, cech, enrico, enrico-printed or auto")
      ->check(CLI::IsMember({"auto", "filtration", "cech", "enrico", "enrico-printed"}));
  localcoh->add_option("--window", window, "Degrees a..b");

  auto* dual = app.add_subcommand("dual", "Alexander dual of a complex");
  dual->add_option("input", path, "Complex JSON")->required();

  auto* shift = app.add_subcommand("shift", "Symmetric algebraic shifting of a complex");
  shift->add_option("input", path, "Complex JSON")->required();

  auto* seqcm = app.add_subcommand("seqcm", "Decide sequential Cohen-Macaulayness of a complex");
  seqcm->add_option("input", path, "Complex JSON")->required();

  auto* verify = app.add_subcommand("verify", "Theorem checks and the corpus acceptance suite");
  verify->require_subcommand(1);
  verify->fallthrough();
  auto* main_theorem = verify->add_subcommand("main-theorem", "Compare local cohomology of R/I and R/gin(I)");
  main_theorem->add_option("input", path, "Ideal JSON")->required();
  main_theorem->add_option("--window", window, "Degrees a..b");
  auto* thm41 = verify->add_subcommand("thm41", "Compare local cohomology of K[Delta] and K[Delta^s]");
  thm41->add_option("input", path, "Complex JSON")->required();
  thm41->add_option("--window", window, "Degrees a..b");
  auto* corpus = verify->add_subcommand("corpus", "Run every acceptance criterion over a corpus directory");
  corpus->add_option("dir", path, "Directory with ideals/ and complexes/")->required()->check(CLI::ExistingDirectory);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    Run run(opts);
    Context& c = run.c;
    char* out = nullptr;
    if (*gin) {
      Input in = load_ideal(c, path);
      c.check(gincoh_gin(c.ctx, in.ideal.get(), &out));
      run.print("gin", take(out), true);
    } else if (*hilbert) {
      Input in = load_ideal(c, path);
      c.check(gincoh_hilbert(c.ctx, in.ideal.get(), parse_window(window), &out));
      run.print("hilbert", take(out), false);
    } else if (*betti) {
      Input in = load(c, path);
      if (in.complex)
        c.check(gincoh_betti_complex(c.ctx, in.complex.get(), oracle ? 1 : 0, &out));
      else
        c.check(gincoh_betti_ideal(c.ctx, in.ideal.get(), oracle ? 1 : 0, &out));
      run.print("betti", take(out), false);
    } else if (*localcoh) {
      Input in = load(c, path);
      const gincoh_route r = route_of(route, in);
      const auto w = optional_window(window);
      const gincoh_window* wp = w ? &*w : nullptr;
      if (in.complex)
        c.check(gincoh_localcoh_complex(c.ctx, in.complex.get(), r, wp, &out));
      else
        c.check(gincoh_localcoh_ideal(c.ctx, in.ideal.get(), r, wp, &out));
      run.print("localcoh", take(out), r == GINCOH_ROUTE_FILTRATION);
    } else if (*dual) {
      Input in = load_complex(c, path);
      gincoh_complex* d = nullptr;
      c.check(gincoh_dual(c.ctx, in.complex.get(), &d));
      ComplexPtr owned(d);
      c.check(gincoh_complex_to_json(c.ctx, d, &out));
      run.print("dual", take(out), false);
    } else if (*shift) {
      Input in = load_complex(c, path);
      c.check(gincoh_shift(c.ctx, in.complex.get(), &out));
      run.print("shift", take(out), true);
    } else if (*seqcm) {
      Input in = load_complex(c, path);
      c.check(gincoh_seqcm(c.ctx, in.complex.get(), &out));
      run.print("seqcm", take(out), true);
    } else if (*main_theorem) {
      Input in = load_ideal(c, path);
      const auto w = optional_window(window);
      const gincoh_status s = gincoh_verify_main_theorem(c.ctx, in.ideal.get(), w ? &*w : nullptr, &out);
      run.check_report("verify main-theorem", s, out, true);
    } else if (*thm41) {
      Input in = load_complex(c, path);
      const auto w = optional_window(window);
      const gincoh_status s = gincoh_verify_thm41(c.ctx, in.complex.get(), w ? &*w : nullptr, &out);
      run.check_report("verify thm41", s, out, true);
    } else if (*corpus) {
      const gincoh_status s = gincoh_verify_corpus(c.ctx, path.c_str(), &out);
      run.check_report("verify corpus", s, out, true);
    }
  } catch (const Failure& f) {
    std::cerr << "gincoh: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "gincoh: [E_INTERNAL] " << e.what() << "\n";
    return kConsistency;
  }
  return kOk;
}
