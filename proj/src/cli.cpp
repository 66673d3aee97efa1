#include "ppk/cli.hpp"

#include <CLI11/CLI11.hpp>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "ppk/analysis.hpp"
#include "ppk/errors.hpp"
#include "ppk/oracle.hpp"
#include "ppk/parallel.hpp"
#include "ppk/theta.hpp"

namespace ppk {

using ojson = nlohmann::ordered_json;

Monomial parse_monomial(const std::string& text, unsigned p) {
  if (text == "1") return Monomial();
  std::vector<Monomial::Factor> factors;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text.compare(pos, 2, "X[") != 0) throw UsageError("bad monomial '" + text + "': expected X[...]");
    const std::size_t close = text.find(']', pos);
    if (close == std::string::npos) throw UsageError("bad monomial '" + text + "': missing ]");
    Word w = Word::parse(text.substr(pos + 2, close - pos - 2), p);
    pos = close + 1;
    unsigned k = 1;
    if (pos < text.size() && text[pos] == '^') {
      std::size_t used = 0;
      const std::string rest = text.substr(pos + 1);
      try {
        k = static_cast<unsigned>(std::stoul(rest, &used));
      } catch (const std::exception&) {
        throw UsageError("bad monomial '" + text + "': bad exponent");
      }
      pos += 1 + used;
    }
    factors.emplace_back(std::move(w), k);
    if (pos < text.size()) {
      if (text[pos] != '*') throw UsageError("bad monomial '" + text + "': expected *");
      ++pos;
      if (pos == text.size()) throw UsageError("bad monomial '" + text + "': trailing *");
    }
  }
  if (factors.empty()) throw UsageError("empty monomial");
  return Monomial(std::move(factors));
}

std::string emit_terms_table(unsigned p, unsigned j_max) {
  const auto bounds = term_bound_series(p, j_max);
  std::ostringstream actual, bound;
  for (unsigned j = 0; j <= j_max; ++j) {
    if (j > 0) {
      actual << ",";
      bound << ",";
    }
    actual << build_Pj(p, j).term_count();
    bound << bounds[j].get_str();
  }
  return actual.str() + "\n" + bound.str() + "\n";
}

namespace {

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(15) << v;
  return os.str();
}

ojson words_json(const std::vector<Word>& ws) {
  ojson a = ojson::array();
  for (const auto& w : ws) a.push_back(w.str());
  return a;
}

std::string words_line(const std::vector<Word>& ws) {
  std::string s;
  for (const auto& w : ws) s += (s.empty() ? "" : " ") + w.str();
  return s;
}

ojson complex_json(const Complex& z) {
  return ojson::array({static_cast<double>(z.real()), static_cast<double>(z.imag())});
}

int cmd_poly(const CommandConfig& c, std::ostream& out) {
  const BlockPolynomial P = c.cumulative ? cumulative_Pj(c.p, c.j) : build_Pj(c.p, c.j);
  if (c.format == Format::json)
    out << P.to_json(2) << "\n";
  else
    out << P.str() << "\n";
  return exit_ok;
}

int cmd_theta(const CommandConfig& c, std::ostream& out) {
  const RowPolynomial T = T_poly(c.n, c.p);
  if (c.format == Format::json) {
    ojson doc;
    doc["p"] = c.p;
    doc["n"] = c.n;
    doc["coeffs"] = T.coeffs;
    out << doc.dump(2) << "\n";
  } else if (c.format == Format::csv) {
    out << "j,theta\n";
    for (std::size_t j = 0; j < T.coeffs.size(); ++j) out << j << "," << T.coeffs[j] << "\n";
  } else {
    out << T.str() << "\n";
  }
  return exit_ok;
}

int cmd_rw(const CommandConfig& c, std::ostream& out) {
  if (c.word.empty()) throw UsageError("rw needs --word");
  const Word w = Word::parse(c.word, c.p);
  const RationalFunctionQ q = r_w_quotient(w);
  const bool admissible = is_admissible(w);
  if (c.format == Format::json) {
    ojson doc;
    doc["p"] = c.p;
    doc["word"] = w.str();
    doc["r_w"] = q.str();
    doc["admissible"] = admissible;
    if (admissible) {
      doc["alpha"] = r_w_alpha(w).str();
      doc["closed_form_matches"] = r_w_closed(w) == q;
    }
    out << doc.dump(2) << "\n";
  } else {
    out << q.str() << "\n";
  }
  return exit_ok;
}

int cmd_coeffs(const CommandConfig& c, std::ostream& out) {
  if (c.monomial.empty()) throw UsageError("coeffs needs --monomial");
  const Monomial m = parse_monomial(c.monomial, c.p);
  const std::size_t order = c.order >= 0 ? static_cast<std::size_t>(c.order) : std::max(m.weight(), c.j);
  const SeriesQ s = monomial_coefficient_series(m, c.p, order);
  if (c.format == Format::json) {
    ojson doc;
    doc["p"] = c.p;
    doc["monomial"] = m.str();
    ojson coeffs = ojson::array();
    for (const auto& x : s.coeffs()) coeffs.push_back(x.str());
    doc["coeffs"] = std::move(coeffs);
    out << doc.dump(2) << "\n";
  } else if (c.format == Format::csv) {
    out << "j,coeff\n";
    for (std::size_t j = 0; j <= s.order(); ++j) out << j << "," << s[j].str() << "\n";
  } else {
    for (std::size_t j = 0; j <= s.order(); ++j) out << j << ": " << s[j].str() << "\n";
  }
  return exit_ok;
}

int cmd_verify(const CommandConfig& c, std::ostream& out) {
  const RowScanReport rep = verify_rows(c.p, c.n_max);
  if (c.format == Format::json) {
    out << rep.to_json(2) << "\n";
  } else {
    out << "rows n < " << c.n_max << ", p = " << c.p << ": " << (rep.ok() ? "pass" : "FAIL") << "\n";
    if (const auto& f = rep.first_failure)
      out << "counterexample: n = " << f->n << ", j = " << f->j << " (" << f->source << "): expected "
          << f->expected << ", got " << f->actual << "\n";
  }
  return rep.ok() ? exit_ok : exit_failure;
}

int cmd_terms(const CommandConfig& c, std::ostream& out) {
  if (c.j_max > 12 && !c.force) throw UsageError("--jmax above 12 needs --force");
  if (c.format == Format::text) {
    out << emit_terms_table(c.p, c.j_max);
    return exit_ok;
  }
  const auto bounds = term_bound_series(c.p, c.j_max);
  std::vector<std::size_t> actual;
  for (unsigned j = 0; j <= c.j_max; ++j) actual.push_back(build_Pj(c.p, j).term_count());
  if (c.format == Format::json) {
    ojson doc;
    doc["p"] = c.p;
    doc["N"] = actual;
    ojson b = ojson::array();
    for (const auto& x : bounds) b.push_back(x.get_str());
    doc["B"] = std::move(b);
    out << doc.dump(2) << "\n";
  } else {
    out << "j,N_j,B_j\n";
    for (unsigned j = 0; j <= c.j_max; ++j) out << j << "," << actual[j] << "," << bounds[j].get_str() << "\n";
  }
  return exit_ok;
}

ojson profile_json(const RootProfile& prof) {
  ojson doc;
  doc["word"] = prof.word ? prof.word->str() : "";
  doc["class"] = to_string(prof.classification);
  doc["r_w"] = prof.r.str();
  doc["max_xi_modulus"] = prof.max_xi_modulus;
  doc["unit_circle"] = prof.unit_circle_certified;
  doc["dominant_singularity"] = prof.dominant_singularity ? complex_json(*prof.dominant_singularity) : ojson();
  doc["coefficient_sum"] = prof.coefficient_sum ? ojson(*prof.coefficient_sum) : ojson();
  return doc;
}

int cmd_classify(const CommandConfig& c, std::ostream& out) {
  if (c.p != 2) throw UsageError("classify is implemented for p = 2");
  if (!c.word.empty()) {
    const RootProfile prof = classify_word(Word::parse(c.word, 2), c.tol);
    if (c.format == Format::json)
      out << profile_json(prof).dump(2) << "\n";
    else if (c.format == Format::csv)
      out << classification_csv({prof});
    else
      out << prof.word->str() << ": " << to_string(prof.classification)
          << ", max |xi| = " << format_double(prof.max_xi_modulus) << "\n";
    return exit_ok;
  }
  if (c.max_len > 16 && !c.force) throw UsageError("--max-len above 16 needs --force");
  const ConvergenceScan scan = scan_convergent_words(c.max_len, c.tol);
  if (c.format == Format::csv) {
    out << classification_csv(scan.profiles);
  } else if (c.format == Format::json) {
    ojson doc;
    doc["max_len"] = c.max_len;
    doc["tol"] = c.tol;
    doc["ones_zero"] = words_json(scan.ones_zero);
    doc["ones_4s1_zero_zero"] = words_json(scan.ones_4s1_zero_zero);
    doc["ones_zero_ones_zero"] = words_json(scan.ones_zero_ones_zero);
    doc["exceptional"] = words_json(scan.exceptional);
    doc["boundary"] = words_json(scan.boundary);
    out << doc.dump(2) << "\n";
  } else {
    out << "1^s0: " << words_line(scan.ones_zero) << "\n";
    out << "1^(4s+1)00: " << words_line(scan.ones_4s1_zero_zero) << "\n";
    out << "1^s01^t0: " << words_line(scan.ones_zero_ones_zero) << "\n";
    out << "exceptional: " << words_line(scan.exceptional) << "\n";
    out << "boundary: " << words_line(scan.boundary) << "\n";
  }
  return exit_ok;
}

int cmd_tildetheta(const CommandConfig& c, std::ostream& out) {
  std::vector<std::vector<std::uint64_t>> rows;
  if (c.product)
    rows = tilde_product_gf(c.p, c.k_max, static_cast<unsigned>(c.n_max));
  else
    rows = TildeTable(c.p, c.k_max, c.n_max).rows();
  if (c.format == Format::json) {
    ojson doc;
    doc["p"] = c.p;
    doc["rows"] = rows;
    out << doc.dump(2) << "\n";
  } else if (c.format == Format::csv) {
    for (const auto& row : rows) {
      for (std::size_t n = 0; n < row.size(); ++n) out << (n ? "," : "") << row[n];
      out << "\n";
    }
  } else {
    out << format_tilde_table(rows);
  }
  return exit_ok;
}

int cmd_columns(const CommandConfig& c, std::ostream& out) {
  if (c.p != 2) throw UsageError("columns is implemented for p = 2");
  const ColumnCheckReport rep = column_check_range(c.t_max, c.j_max, c.m_max);
  if (c.format == Format::json) {
    out << rep.to_json(2) << "\n";
  } else if (c.format == Format::csv) {
    out << "t,j,estimate,prediction,deviation\n";
    for (const auto& r : rep.rows)
      out << r.t << "," << r.j << "," << format_double(r.estimate) << "," << r.prediction << ","
          << format_double(r.deviation) << "\n";
  } else {
    out << "columns t <= " << c.t_max << ", j <= " << c.j_max << ", m < " << c.m_max
        << ": max deviation " << format_double(rep.max_deviation) << " (" << (rep.ok() ? "pass" : "FAIL") << ")\n";
  }
  return rep.ok() ? exit_ok : exit_failure;
}

void validate(const CommandConfig& c) {
  if (c.p != 2 && c.p != 3 && c.p != 5 && c.p != 7) throw UsageError("unsupported prime " + std::to_string(c.p));
  if (c.command == Command::poly && c.j > 12 && !c.force) throw UsageError("--j above 12 needs --force");
  if (c.command == Command::columns && c.j_max > 8 && !c.force) throw UsageError("--jmax above 8 needs --force");
  if (!(c.tol > 0)) throw UsageError("--tol must be positive");
}

}  // namespace

int dispatch(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    set_jobs(resolve_jobs(config.jobs));
    switch (config.command) {
      case Command::poly: return cmd_poly(config, out);
      case Command::theta: return cmd_theta(config, out);
      case Command::rw: return cmd_rw(config, out);
      case Command::coeffs: return cmd_coeffs(config, out);
      case Command::verify: return cmd_verify(config, out);
      case Command::terms: return cmd_terms(config, out);
      case Command::classify: return cmd_classify(config, out);
      case Command::tildetheta: return cmd_tildetheta(config, out);
      case Command::columns: return cmd_columns(config, out);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_failure;
  }
  return exit_usage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CommandConfig c;
  CLI::App app{"p-adic valuations of binomial coefficients", "ppk"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
  auto common = [&](CLI::App* sub) {
    sub->add_option("--p", c.p, "prime base (2, 3, 5, 7)");
    sub->add_option("--format", c.format, "text, json or csv")->transform(CLI::CheckedTransformer(formats));
    sub->add_option("--jobs", c.jobs, "worker threads (default: PPK_JOBS or all cores)");
  };

  struct Sub {
    const char* name;
    Command cmd;
    const char* help;
  };
  const Sub subs[] = {{"poly", Command::poly, "print P_j"},
                      {"theta", Command::theta, "print the row polynomial T_n"},
                      {"rw", Command::rw, "print r_w"},
                      {"coeffs", Command::coeffs, "coefficient series of a monomial"},
                      {"verify", Command::verify, "check P_j against brute-force row counts"},
                      {"terms", Command::terms, "term counts of P_j and their bound"},
                      {"classify", Command::classify, "convergence classification of words"},
                      {"tildetheta", Command::tildetheta, "table of the simplified recurrence"},
                      {"columns", Command::columns, "column densities against P_j"}};
  std::map<CLI::App*, Command> lookup;
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    common(sub);
    lookup[sub] = s.cmd;
    switch (s.cmd) {
      case Command::poly:
        sub->add_option("--j", c.j, "degree")->required();
        sub->add_flag("--cumulative", c.cumulative, "P_0 + ... + P_{j-1}");
        sub->add_flag("--force", c.force, "allow j above 12");
        break;
      case Command::theta: sub->add_option("--n", c.n, "row index")->required(); break;
      case Command::rw: sub->add_option("--word", c.word, "digits, most significant first")->required(); break;
      case Command::coeffs:
        sub->add_option("--monomial", c.monomial, "e.g. X[10]^2*X[110]")->required();
        sub->add_option("--j", c.j, "series order when --order is absent");
        sub->add_option("--order", c.order, "series order");
        break;
      case Command::verify: sub->add_option("--nmax", c.n_max, "check rows n < nmax"); break;
      case Command::terms:
        sub->add_option("--jmax", c.j_max, "largest j");
        sub->add_flag("--force", c.force, "allow jmax above 12");
        break;
      case Command::classify:
        sub->add_option("--max-len", c.max_len, "longest word scanned");
        sub->add_option("--word", c.word, "classify a single word");
        sub->add_option("--tol", c.tol, "boundary tolerance on |xi| - 1");
        sub->add_flag("--force", c.force, "allow max-len above 16");
        break;
      case Command::tildetheta:
        sub->add_option("--kmax", c.k_max, "largest k");
        sub->add_option("--nmax", c.n_max, "largest n");
        sub->add_flag("--product", c.product, "expand the infinite product instead");
        break;
      case Command::columns:
        sub->add_option("--tmax", c.t_max, "largest t");
        sub->add_option("--jmax", c.j_max, "largest j");
        sub->add_option("--mmax", c.m_max, "sample m < mmax");
        sub->add_flag("--force", c.force, "allow jmax above 8");
        break;
    }
  }
  // Subcommand-specific defaults differ from the struct defaults.
  app.get_subcommand("tildetheta")->preparse_callback([&](std::size_t) { c.n_max = 17; });
  app.get_subcommand("columns")->preparse_callback([&](std::size_t) { c.j_max = 4; });

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
  }
  for (const auto& [sub, cmd] : lookup)
    if (sub->parsed()) c.command = cmd;
  return dispatch(c, out, err);
}

}  // namespace ppk
