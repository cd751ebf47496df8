// qf: command-line front end for the quandleforge library. Every verb is a
// thin shell over one library pipeline; identical inputs give byte-identical
// output. Exit codes: 0 success, 1 domain error or failed verification,
// 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "qf/cyclotomic.hpp"
#include "qf/errors.hpp"
#include "qf/finite_analysis.hpp"
#include "qf/finite_table.hpp"
#include "qf/free_quandle.hpp"
#include "qf/laurent.hpp"
#include "qf/normalize.hpp"
#include "qf/permutation.hpp"
#include "qf/serialization.hpp"
#include "qf/term.hpp"
#include "qf/variety.hpp"
#include "qf/verify.hpp"

namespace {

using ojson = nlohmann::ordered_json;

// Nonzero once a verification verb reports FAIL; main returns it.
int exit_status = 0;

constexpr const char* kVarietyHelp =
    "Variety flag: medial, sym:<n>, red:<m>, sym:<n>+red:2, mod:<poly>";

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    const auto a = item.find_first_not_of(" \t");
    const auto b = item.find_last_not_of(" \t");
    out.push_back(a == std::string::npos ? std::string() : item.substr(a, b - a + 1));
  }
  return out;
}

qf::GeneratorSet generator_names(const std::string& flag) {
  return qf::GeneratorSet::of(split_list(flag, ','));
}

qf::GeneratorSet numbered_generators(int count) {
  std::vector<std::string> names;
  for (int i = 0; i < count; ++i) names.push_back(std::to_string(i));
  return qf::GeneratorSet::of(std::move(names));
}

ojson element_json(const qf::FreeElement& p) {
  return ojson::parse(qf::element_to_json(p));
}

void emit_table(const qf::FiniteBinaryTable& Q, const std::string& out, bool as_json) {
  if (!out.empty()) {
    Q.save_file(out);
    if (as_json)
      std::cout << ojson{{"out", out}, {"n", Q.size()}}.dump() << '\n';
    else
      std::cout << "wrote " << out << " (" << Q.size() << " elements)\n";
  } else if (as_json) {
    std::cout << qf::table_to_json(Q) << '\n';
  } else {
    Q.save(std::cout);
  }
}

void setup_normalize(CLI::App& app) {
  struct Opts {
    std::string variety = "medial";
    std::string term;
    bool json = false;
  };
  auto opts = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("normalize", "Normal form of a term in a variety");
  cmd->add_option("--variety", opts->variety, kVarietyHelp);
  cmd->add_flag("--json", opts->json, "Emit JSON");
  cmd->add_option("term", opts->term, "Term over *, \\ (or bs), and identifiers")->required();
  cmd->callback([opts] {
    qf::FreeElement nf =
        qf::normalize(qf::Term::parse(opts->term), qf::VarietySpec::parse(opts->variety));
    if (opts->json)
      std::cout << qf::element_to_json(nf) << '\n';
    else
      std::cout << nf.str() << '\n';
  });
}

void setup_decide(CLI::App& app) {
  struct Opts {
    std::string variety = "medial";
    std::string lhs, rhs;
    bool json = false;
  };
  auto opts = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("decide", "Decide whether an identity holds in a variety");
  cmd->add_option("--variety", opts->variety, kVarietyHelp);
  cmd->add_flag("--json", opts->json, "Emit JSON");
  cmd->add_option("lhs", opts->lhs, "Left-hand term")->required();
  cmd->add_option("rhs", opts->rhs, "Right-hand term")->required();
  cmd->callback([opts] {
    qf::Verdict v = qf::decide_identity(qf::Term::parse(opts->lhs), qf::Term::parse(opts->rhs),
                                        qf::VarietySpec::parse(opts->variety));
    if (opts->json) {
      ojson out{{"verdict", v.valid ? "valid" : "invalid"},
                {"lhs_nf", element_json(v.lhs_nf)},
                {"rhs_nf", element_json(v.rhs_nf)}};
      std::cout << out.dump() << '\n';
    } else if (v.valid) {
      std::cout << "valid\n";
    } else {
      std::cout << "invalid\n"
                << "lhs: " << v.lhs_nf.str() << '\n'
                << "rhs: " << v.rhs_nf.str() << '\n';
    }
  });
}

std::vector<int> parse_orders(const std::string& flag) {
  std::vector<int> orders;
  for (const auto& part : split_list(flag, ',')) orders.push_back(std::stoi(part));
  return orders;
}

std::vector<std::vector<qf::Int>> parse_matrix(const std::string& flag) {
  std::vector<std::vector<qf::Int>> rows;
  for (const auto& row : split_list(flag, ';')) {
    rows.emplace_back();
    for (const auto& entry : split_list(row, ',')) rows.back().emplace_back(entry);
  }
  return rows;
}

void setup_construct(CLI::App& app) {
  auto* cmd = app.add_subcommand("construct", "Build and export Cayley tables");
  cmd->require_subcommand(1);

  {
    struct Opts {
      std::int64_t k = 0, u = 0;
      std::string orders, matrix, out;
      bool json = false;
    };
    auto opts = std::make_shared<Opts>();
    auto* sub = cmd->add_subcommand("affine", "Affine quandle over a finite abelian group");
    auto* k_opt = sub->add_option("--k", opts->k, "Cyclic group order");
    auto* u_opt = sub->add_option("--u", opts->u, "Unit the automorphism multiplies by");
    auto* orders_opt =
        sub->add_option("--orders", opts->orders, "Cyclic orders of a direct sum, e.g. 2,2");
    auto* matrix_opt =
        sub->add_option("--matrix", opts->matrix, "Automorphism rows, e.g. 0,1;1,0");
    k_opt->needs(u_opt)->excludes(orders_opt);
    u_opt->needs(k_opt);
    orders_opt->needs(matrix_opt);
    matrix_opt->needs(orders_opt);
    sub->add_option("--out", opts->out, "Write the table to this file");
    sub->add_flag("--json", opts->json, "Emit JSON");
    sub->callback([opts] {
      if (opts->orders.empty() && opts->k == 0)
        throw CLI::ValidationError("construct affine", "give --k/--u or --orders/--matrix");
      qf::FiniteBinaryTable Q =
          opts->orders.empty()
              ? qf::affine_quandle(static_cast<int>(opts->k), qf::Int(opts->u))
              : qf::affine_quandle(parse_orders(opts->orders), parse_matrix(opts->matrix));
      emit_table(Q, opts->out, opts->json);
    });
  }

  {
    struct Opts {
      int n = 0;
      int gens = 2;
      std::size_t max = 10000;
      std::string out;
      bool json = false;
    };
    auto opts = std::make_shared<Opts>();
    auto* sub =
        cmd->add_subcommand("red2sym", "Free 2-reductive n-symmetric quandle on g generators");
    sub->add_option("--n", opts->n, "Symmetry order")->required();
    sub->add_option("--gens", opts->gens, "Number of generators");
    sub->add_option("--max", opts->max, "Element-count cap");
    sub->add_option("--out", opts->out, "Write the table to this file");
    sub->add_flag("--json", opts->json, "Emit JSON");
    sub->callback([opts] {
      qf::FiniteBinaryTable Q =
          qf::free_2reductive_symmetric(opts->n, numbered_generators(opts->gens), opts->max);
      emit_table(Q, opts->out, opts->json);
    });
  }
}

void setup_analyze(CLI::App& app) {
  struct Opts {
    std::string file;
    unsigned threads = 1;
    bool json = false;
  };
  auto opts = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("analyze", "Axioms, translation groups, orbits, and variety scan");
  cmd->add_option("file", opts->file, "Table file: n, then n rows of n entries")->required();
  cmd->add_option("--threads", opts->threads, "Threads for the mediality check");
  cmd->add_flag("--json", opts->json, "Emit JSON");
  cmd->callback([opts] {
    qf::FiniteBinaryTable Q = qf::FiniteBinaryTable::load_file(opts->file);
    qf::AxiomReport ax = qf::check_axioms(Q, opts->threads);
    auto flag = [](bool b) { return b ? "yes" : "no"; };

    ojson out{{"n", Q.size()},
              {"idempotent", ax.idempotent},
              {"left_quasigroup", ax.left_quasigroup},
              {"left_distributive", ax.left_distributive},
              {"medial", ax.medial},
              {"medial_quandle", ax.is_medial_quandle()}};
    std::ostringstream human;
    human << "elements: " << Q.size() << '\n'
          << "idempotent: " << flag(ax.idempotent) << '\n'
          << "left quasigroup: " << flag(ax.left_quasigroup) << '\n'
          << "left distributive: " << flag(ax.left_distributive) << '\n'
          << "medial: " << flag(ax.medial) << '\n'
          << "medial quandle: " << flag(ax.is_medial_quandle()) << '\n';

    if (ax.left_quasigroup) {
      qf::PermGroup L = qf::lmlt(Q);
      qf::PermGroup D = qf::dis(Q);
      qf::MedialityReport mr = qf::medial_iff_dis_abelian(Q);
      auto orbit_list = qf::orbits(Q);
      out["lmlt"] = ojson{{"size", L.size()}, {"abelian", L.is_abelian()}};
      out["dis"] = ojson{{"size", D.size()}, {"abelian", D.is_abelian()}};
      out["medial_iff_dis_abelian"] = mr.agree();
      out["orbits"] = orbit_list;
      human << "LMlt: " << L.size() << " elements, abelian " << flag(L.is_abelian()) << '\n'
            << "Dis: " << D.size() << " elements, abelian " << flag(D.is_abelian()) << '\n'
            << "mediality agrees with abelian Dis: " << flag(mr.agree()) << '\n';
      human << "orbits:";
      for (const auto& orbit : orbit_list) {
        human << " {";
        for (std::size_t i = 0; i < orbit.size(); ++i) human << (i ? "," : "") << orbit[i];
        human << '}';
      }
      human << '\n';

      std::vector<unsigned> sym, red;
      for (unsigned n = 2; n <= 6; ++n)
        if (qf::check_symmetry(Q, n)) sym.push_back(n);
      for (unsigned m = 2; m <= 6; ++m)
        if (qf::check_reductivity(Q, m)) red.push_back(m);
      out["symmetric"] = sym;
      out["reductive"] = red;
      auto scan_line = [&human](const char* label, const std::vector<unsigned>& hits) {
        human << label << ':';
        if (hits.empty()) human << " none";
        for (unsigned v : hits) human << ' ' << v;
        human << '\n';
      };
      scan_line("symmetric orders (n <= 6)", sym);
      scan_line("reductive orders (m <= 6)", red);
    }

    if (opts->json)
      std::cout << out.dump() << '\n';
    else
      std::cout << human.str();
  });
}

void setup_embed(CLI::App& app) {
  struct Opts {
    std::string variety = "medial";
    std::string gens, element;
    bool json = false;
  };
  auto opts = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("embed", "Map a free-quandle element to its affine vector");
  cmd->add_option("--variety", opts->variety, kVarietyHelp);
  cmd->add_option("--gens", opts->gens, "Generator names in order; the first is the base")
      ->required();
  cmd->add_flag("--json", opts->json, "Emit JSON");
  cmd->add_option("element", opts->element, "Element as JSON {\"gen\", \"coeffs\"}")->required();
  cmd->callback([opts] {
    auto ctx = qf::VarietySpec::parse(opts->variety).context(generator_names(opts->gens));
    qf::Displacement a = qf::embed_affine(qf::element_from_json(opts->element, ctx));
    if (opts->json)
      std::cout << qf::vector_to_json(a) << '\n';
    else
      std::cout << a.str() << '\n';
  });
}

void setup_unembed(CLI::App& app) {
  struct Opts {
    std::string variety = "medial";
    std::string gens, vec;
    bool json = false;
  };
  auto opts = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("unembed", "Recover the free-quandle element of an affine vector");
  cmd->add_option("--variety", opts->variety, kVarietyHelp);
  cmd->add_option("--gens", opts->gens, "Generator names in order; the first is the base")
      ->required();
  cmd->add_flag("--json", opts->json, "Emit JSON");
  cmd->add_option("vector", opts->vec, "Module vector as JSON {\"coeffs\"}")->required();
  cmd->callback([opts] {
    auto ctx = qf::VarietySpec::parse(opts->variety).context(generator_names(opts->gens));
    qf::FreeElement p = qf::unembed_affine(qf::vector_from_json(opts->vec, ctx));
    if (opts->json)
      std::cout << qf::element_to_json(p) << '\n';
    else
      std::cout << p.str() << '\n';
  });
}

void setup_crt(CLI::App& app) {
  struct Opts {
    unsigned n = 0;
    bool json = false;
  };
  auto opts = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("crt", "Cyclotomic factors of 1 + t + ... + t^(n-1)");
  cmd->add_option("--n", opts->n, "Symmetry order n >= 2")->required();
  cmd->add_flag("--json", opts->json, "Emit JSON");
  cmd->callback([opts] {
    std::vector<qf::LaurentPoly> factors = qf::factor_symmetric_poly(opts->n);
    qf::LaurentPoly product = qf::LaurentPoly::one();
    for (const auto& f : factors) product *= f;
    qf::LaurentPoly sum;
    for (unsigned r = 0; r < opts->n; ++r) sum += qf::LaurentPoly::t(r);
    if (product != sum)
      qf::raise(qf::Errc::FactorMismatch, "cyclotomic product differs from 1 + t + ... + t^" +
                                              std::to_string(opts->n - 1));
    if (opts->json) {
      ojson names = ojson::array();
      for (const auto& f : factors) names.push_back(f.str());
      std::cout << ojson{{"n", opts->n},
                         {"factors", names},
                         {"product", product.str()},
                         {"verified", true}}
                       .dump()
                << '\n';
    } else {
      for (std::size_t i = 0; i < factors.size(); ++i)
        std::cout << (i ? ", " : "") << factors[i].str();
      std::cout << '\n' << "product = " << product.str() << ": ok\n";
    }
  });
}

void setup_joyce(CLI::App& app) {
  struct Opts {
    unsigned check = 0;
    unsigned gens = 3;
    bool json = false;
  };
  auto opts = std::make_shared<Opts>();
  auto* cmd =
      app.add_subcommand("joyce", "Cross-check the involutory free quandle against its plane model");
  cmd->add_option("--check", opts->check, "Maximum term length in generators")->required();
  cmd->add_option("--gens", opts->gens, "Number of generators");
  cmd->add_flag("--json", opts->json, "Emit JSON");
  cmd->callback([opts] {
    qf::JoyceCheckReport rep = qf::joyce_word_check(opts->check, opts->gens);
    if (opts->json) {
      std::cout << ojson{{"max_leaves", opts->check},
                         {"generators", opts->gens},
                         {"distinct_values", rep.distinct_values},
                         {"passed", rep.passed},
                         {"detail", rep.detail}}
                       .dump()
                << '\n';
    } else {
      std::cout << rep.detail << '\n' << (rep.passed ? "PASS" : "FAIL") << '\n';
    }
    if (!rep.passed) exit_status = 1;
  });
}

void setup_verify_example(CLI::App& app) {
  struct Opts {
    bool json = false;
  };
  auto opts = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("verify-example",
                                 "Round-trip the worked three-generator embedding example");
  cmd->add_flag("--json", opts->json, "Emit JSON");
  cmd->callback([opts] {
    qf::WorkedExampleReport rep = qf::verify_worked_example();
    if (opts->json) {
      std::cout << ojson{{"passed", rep.passed}, {"lines", rep.lines}}.dump() << '\n';
    } else {
      for (const auto& line : rep.lines) std::cout << line << '\n';
    }
    if (!rep.passed) exit_status = 1;
  });
}

void setup_suite(CLI::App& app) {
  struct Opts {
    unsigned threads = 1;
    bool json = false;
  };
  auto opts = std::make_shared<Opts>();
  auto* cmd = app.add_subcommand("suite", "Run all acceptance checks");
  cmd->add_option("--threads", opts->threads, "Threads for the parallel checks");
  cmd->add_flag("--json", opts->json, "Emit JSON");
  cmd->callback([opts] {
    std::vector<qf::CriterionResult> results = qf::run_acceptance_suite(opts->threads);
    std::size_t passed = 0;
    for (const auto& r : results) passed += r.passed ? 1 : 0;
    if (opts->json) {
      ojson rows = ojson::array();
      for (const auto& r : results)
        rows.push_back(ojson{
            {"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
      std::cout << ojson{{"criteria", rows}, {"passed", passed}, {"total", results.size()}}.dump()
                << '\n';
    } else {
      for (const auto& r : results) {
        std::string head = "criterion " + std::to_string(r.id) + ' ' + r.name;
        head.resize(std::max<std::size_t>(head.size() + 2, 42), ' ');
        std::cout << head << (r.passed ? "PASS" : "FAIL") << "  " << r.detail << '\n';
      }
      std::cout << passed << '/' << results.size() << " criteria passed\n";
    }
    if (passed != results.size()) exit_status = 1;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact algebra for free medial quandles and finite Cayley tables"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "0.1.0");

  setup_normalize(app);
  setup_decide(app);
  setup_construct(app);
  setup_analyze(app);
  setup_embed(app);
  setup_unembed(app);
  setup_crt(app);
  setup_joyce(app);
  setup_verify_example(app);
  setup_suite(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const qf::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return exit_status;
}
