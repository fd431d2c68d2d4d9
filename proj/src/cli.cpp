/* Copyright 2026 The wittc Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "wittc/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wittc/group_ring.hpp"
#include "wittc/json_io.hpp"
#include "wittc/verification.hpp"
#include "wittc/witt_curve.hpp"
#include "wittc/witt_k.hpp"

namespace wittc::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string q;
  unsigned r = 0;
  bool r_given = false;
  std::string gram;
  std::string diag;
  std::string other;
  std::string word;
  std::string with;
  std::string op = "add";
  std::string element;
  bool json = false;
  std::uint64_t max_search = kDefaultMaxSearch;
  std::uint64_t random_triples = 100'000;
  std::uint64_t seed = 0x5eed;
  int only = 0;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

// Splits on `sep` outside parentheses.
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw WittError("unbalanced parentheses in '" + s + "'");
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) throw WittError("unbalanced parentheses in '" + s + "'");
  out.push_back(trim(cur));
  return out;
}

std::int64_t parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    throw WittError("malformed integer '" + s + "'");
  }
}

FieldElement parse_entry(const FiniteField& field, const std::string& token) {
  if (token.empty()) throw WittError("empty matrix entry");
  if (token.front() == '(') {
    if (token.back() != ')') throw WittError("malformed tuple '" + token + "'");
    std::vector<std::int64_t> coeffs;
    for (const auto& c : split_top(token.substr(1, token.size() - 2), ',')) {
      coeffs.push_back(parse_int(c));
    }
    return field.from_coeffs(coeffs);
  }
  return field.from_int(parse_int(token));
}

std::string poly_string(const std::vector<std::uint32_t>& coeffs) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0 || coeffs[i] != 1) os << coeffs[i];
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  return first ? "0" : os.str();
}

std::string wk_label(const WittK& a) {
  const std::string s = a.symbol();
  return (s == "1" || s == "s") ? "<" + s + ">" : s;
}

void print_table(std::ostream& out, const std::string& title,
                 const std::vector<std::string>& labels,
                 const std::vector<std::vector<std::string>>& cells,
                 std::vector<std::string> columns = {}) {
  if (columns.empty()) columns = labels;
  std::size_t width = 1;
  for (const auto& l : labels) width = std::max(width, l.size());
  for (const auto& l : columns) width = std::max(width, l.size());
  for (const auto& row : cells) {
    for (const auto& c : row) width = std::max(width, c.size());
  }
  out << title << ":\n" << std::left << std::setw(static_cast<int>(width)) << ""
      << " |";
  for (const auto& l : columns) out << ' ' << std::setw(static_cast<int>(width)) << l;
  out << '\n' << std::string(width + 2 + columns.size() * (width + 1), '-') << '\n';
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out << std::setw(static_cast<int>(width)) << labels[i] << " |";
    for (const auto& c : cells[i]) out << ' ' << std::setw(static_cast<int>(width)) << c;
    out << '\n';
  }
  out << std::right;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& x : row) r.push_back(x.to_string());
    rows.push_back(r);
  }
  return rows;
}

json form_json(const DiagonalForm& f) {
  json entries = json::array();
  for (const auto& a : f.entries()) entries.push_back(a.to_string());
  return entries;
}

void require_rank(unsigned r, unsigned bound, const char* what) {
  if (r > bound) {
    throw WittError(std::string(what) + " supports --r <= " +
                    std::to_string(bound) + ", got " + std::to_string(r));
  }
}

int cmd_field_info(const Options& o, std::ostream& out) {
  const auto field = FiniteField::parse(o.q);
  const FieldElement s = field.canonical_nonsquare();
  std::uint64_t squares = 0;
  for (const auto& x : field.units()) squares += x.is_square() ? 1 : 0;
  if (o.json) {
    out << json{{"field", field.name()},
                {"p", field.characteristic()},
                {"e", field.degree()},
                {"q", field.order()},
                {"modulus", field.modulus()},
                {"s", s.to_string()},
                {"q_mod_4", field.residue_mod4()},
                {"minus_one_is_square", (-field.one()).is_square()},
                {"nonzero_squares", squares}}
               .dump(2)
        << '\n';
    return kExitOk;
  }
  out << "field: " << field.name() << '\n'
      << "p = " << field.characteristic() << '\n'
      << "e = " << field.degree() << '\n'
      << "q = " << field.order() << '\n'
      << "modulus: " << poly_string(field.modulus()) << '\n'
      << "s = " << s.to_string() << '\n'
      << "q mod 4 = " << field.residue_mod4() << '\n'
      << "-1 is " << ((-field.one()).is_square() ? "a square" : "a non-square")
      << '\n'
      << "nonzero squares: " << squares << " of " << field.order() - 1 << '\n';
  return kExitOk;
}

int cmd_wittk_table(const Options& o, std::ostream& out) {
  const auto field = FiniteField::parse(o.q);
  const Mod4 c = mod4_of(field);
  const auto all = WittK::all(c);
  std::vector<std::string> labels;
  for (const auto& a : all) labels.push_back(wk_label(a));
  std::vector<std::vector<std::string>> add(4), mul(4);
  json jadd = json::array(), jmul = json::array();
  for (const auto& a : all) {
    json ra = json::array(), rm = json::array();
    for (const auto& b : all) {
      add[a.index()].push_back(wk_label(wk_add(a, b)));
      mul[a.index()].push_back(wk_label(wk_mul(a, b)));
      ra.push_back(wk_add(a, b).symbol());
      rm.push_back(wk_mul(a, b).symbol());
    }
    jadd.push_back(ra);
    jmul.push_back(rm);
  }
  const auto bullets = verify_bullets(field);
  const bool ok = std::all_of(bullets.begin(), bullets.end(),
                              [](const BulletCheck& b) { return b.passed; });
  const DiagonalForm even_rep = representative(WittK::even(c), field);

  if (o.json) {
    json jb = json::array();
    for (const auto& b : bullets) {
      jb.push_back({{"identity", b.identity},
                    {"applicable", b.applicable},
                    {"passed", b.passed},
                    {"detail", b.detail}});
    }
    out << json{{"field", field.name()},
                {"q_mod_4", field.residue_mod4()},
                {"s", field.canonical_nonsquare().to_string()},
                {"elements", {"0", "1", "s", "e"}},
                {"e", form_json(even_rep)},
                {"add", jadd},
                {"mul", jmul},
                {"bullets", jb},
                {"passed", ok}}
               .dump(2)
        << '\n';
  } else {
    out << "W(k) for k = " << field.name() << ", q = " << field.residue_mod4()
        << " mod 4, s = " << field.canonical_nonsquare().to_string()
        << ", e = " << even_rep.to_string() << "\n\n";
    print_table(out, "Addition", labels, add);
    out << '\n';
    print_table(out, "Multiplication", labels, mul);
    out << '\n';
    for (const auto& b : bullets) {
      out << (b.passed ? "PASS " : "FAIL ") << b.identity;
      if (!b.applicable) out << " [not applicable]";
      out << ": " << b.detail << '\n';
    }
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_form_diag(const Options& o, std::ostream& out) {
  const auto field = FiniteField::parse(o.q);
  const GramForm g(field, parse_gram(field, o.gram));
  const auto d = diagonalize_with_basis(g);
  const auto wk = from_concrete_form(d.form);
  if (o.json) {
    out << json{{"field", field.name()},
                {"diagonal", form_json(d.form)},
                {"basis", matrix_json(d.basis)},
                {"determinant_class", to_string(determinant_class(d.form))},
                {"signed_discriminant", to_string(signed_discriminant(d.form))},
                {"witt_class", wk.symbol()}}
               .dump(2)
        << '\n';
    return kExitOk;
  }
  out << "diagonal: " << d.form.to_string() << '\n' << "basis (columns):\n";
  for (const auto& row : d.basis) {
    out << ' ';
    for (const auto& x : row) out << ' ' << x.to_string();
    out << '\n';
  }
  out << "determinant class: " << to_string(determinant_class(d.form)) << '\n'
      << "signed discriminant: " << to_string(signed_discriminant(d.form)) << '\n'
      << "W(k) class: " << wk_label(wk) << '\n';
  return kExitOk;
}

int cmd_form_witt(const Options& o, std::ostream& out) {
  const auto field = FiniteField::parse(o.q);
  const DiagonalForm f(field, parse_entries(field, o.diag));
  const auto dec = witt_decompose(f, o.max_search);
  const auto inv = witt_invariants(f);
  json j{{"field", field.name()},
         {"form", form_json(f)},
         {"hyperbolic_count", dec.hyperbolic_count},
         {"anisotropic_part", form_json(dec.anisotropic)},
         {"rank_parity", inv.rank_parity},
         {"signed_discriminant", to_string(inv.signed_disc)},
         {"witt_class", from_concrete_form(f).symbol()}};
  std::ostringstream text;
  text << "form: " << f.to_string() << '\n'
       << "hyperbolic planes: " << dec.hyperbolic_count << '\n'
       << "anisotropic part: " << dec.anisotropic.to_string() << '\n'
       << "rank parity: " << inv.rank_parity << '\n'
       << "signed discriminant: " << to_string(inv.signed_disc) << '\n'
       << "W(k) class: " << wk_label(from_concrete_form(f)) << '\n';
  if (!o.other.empty()) {
    const DiagonalForm g(field, parse_entries(field, o.other));
    const bool eq = witt_equal(f, g, o.max_search);
    const bool iso = isometric_by_invariants(f, g);
    j["other"] = form_json(g);
    j["witt_equal"] = eq;
    j["isometric"] = iso;
    text << "other: " << g.to_string() << '\n'
         << "witt_equal: " << (eq ? "true" : "false") << '\n'
         << "isometric: " << (iso ? "true" : "false") << '\n';
  }
  out << (o.json ? j.dump(2) + "\n" : text.str());
  return kExitOk;
}

int cmd_curve_table(const Options& o, std::ostream& out) {
  const auto field = FiniteField::parse(o.q);
  require_rank(o.r, kMaxTableRank, "curve-table");
  const Mod4 c = mod4_of(field);
  const auto classes = enumerate_classes(c, Pic2Group(o.r));
  auto index_of = [&](const WittClass& x) {
    return std::find(classes.begin(), classes.end(), x) - classes.begin();
  };

  std::vector<std::string> labels;
  for (const auto& x : classes) labels.push_back(x.to_string());
  std::vector<std::vector<std::string>> add(classes.size()), mul(classes.size());
  json jadd = json::array(), jmul = json::array();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    json ra = json::array(), rm = json::array();
    for (const auto& b : classes) {
      const auto s = wc_add(classes[i], b);
      const auto p = wc_mul(classes[i], b);
      add[i].push_back(s.to_string());
      mul[i].push_back(p.to_string());
      ra.push_back(index_of(s));
      rm.push_back(index_of(p));
    }
    jadd.push_back(ra);
    jmul.push_back(rm);
  }

  if (o.json) {
    json jc = json::array();
    for (const auto& x : classes) jc.push_back(to_json(x));
    out << json{{"field", field.name()},
                {"q_mod_4", field.residue_mod4()},
                {"r", o.r},
                {"classes", jc},
                {"add", jadd},
                {"mul", jmul}}
               .dump(2)
        << '\n';
    return kExitOk;
  }

  const std::string sigma = c == Mod4::One ? "1" : "s";
  out << "W(C) with |2Pic(C)| = 2^" << o.r << ", k = " << field.name()
      << ", sigma = class of -1 = " << sigma << "\n"
      << "<L_u> is the rank-one form on L twisted by u; <1,-L_u> the even class.\n\n";
  const std::vector<std::string> rows{"<M_v>", "<1,-M'_v'>"};
  const std::vector<std::string> cols{"<L_u>", "<1,-L'_u'>"};
  print_table(out, "Multiplication (symbolic)", rows,
              {{"<LM_uv>", "<1,-L'_u'>"}, {"<1,-M'_v'>", "0"}}, cols);
  out << '\n';
  print_table(out, "Addition (symbolic)", rows,
              {{"<1,-LM_(sigma.uv)>", "<ML'_vu'>"},
               {"<M'L_v'u>", "<1,-M'L'_v'u'>"}},
              cols);
  out << '\n';
  print_table(out, "Addition", labels, add);
  out << '\n';
  print_table(out, "Multiplication", labels, mul);
  return kExitOk;
}

void emit_class(const Options& o, std::ostream& out, const WittClass& a,
                json extra) {
  const auto [du, dl] = signed_discriminant_class(a);
  if (o.json) {
    extra["class"] = to_json(a);
    extra["signed_discriminant"] = {{"u", to_string(du)}, {"L", dl.to_string()}};
    extra["text"] = a.to_string();
    out << extra.dump(2) << '\n';
    return;
  }
  out << "class: " << a.to_string() << '\n'
      << "parity: " << (a.is_odd() ? "odd" : "even") << '\n'
      << "signed discriminant: "
      << WittClass::odd(a.context(), du, dl).to_string() << '\n';
}

int cmd_curve_eval(const Options& o, std::ostream& out) {
  const auto field = FiniteField::parse(o.q);
  const Mod4 c = mod4_of(field);
  const auto word = parse_word(o.word);
  // Without --r the rank is read off the first letter.
  unsigned r = o.r;
  if (!o.r_given && !word.empty()) r = word.front().line.rank();
  require_rank(r, kDefaultEnumerationRank, "curve-eval");
  WittClass result = reduce_word(word, c, r);
  json extra{{"word", o.word}};
  if (!o.with.empty()) {
    const auto other = reduce_word(parse_word(o.with), c, r);
    if (o.op == "add") {
      result = wc_add(result, other);
    } else if (o.op == "mul") {
      result = wc_mul(result, other);
    } else {
      throw WittError("--op must be add or mul, got '" + o.op + "'");
    }
    extra["op"] = o.op;
    extra["with"] = o.with;
  }
  emit_class(o, out, result, extra);
  return kExitOk;
}

GroupRingElement parse_element(const std::string& text, Mod4 c, unsigned r) {
  const std::string t = trim(text);
  if (!t.empty() && t.front() == '[') {
    json j;
    try {
      j = json::parse(t);
    } catch (const json::parse_error& e) {
      throw WittError(std::string("malformed JSON element: ") + e.what());
    }
    return element_from_json(j, c, r);
  }
  GroupRingElement f(c, r);
  if (t.empty() || t == "0") return f;
  for (const auto& term : split_top(t, ';')) {
    const auto colon = term.find(':');
    if (colon == std::string::npos) {
      throw WittError("malformed term '" + term + "', expected coef:L");
    }
    const std::string bits = trim(term.substr(colon + 1));
    const auto l = bits == "O" ? PicElement::identity(r) : PicElement::parse(bits);
    if (l.rank() != r) {
      throw WittError("term '" + term + "' does not have rank " + std::to_string(r));
    }
    f.accumulate(l, WittK::from_symbol(c, trim(term.substr(0, colon))));
  }
  return f;
}

int cmd_curve_normal_form(const Options& o, std::ostream& out) {
  const auto field = FiniteField::parse(o.q);
  require_rank(o.r, kDefaultEnumerationRank, "curve-normal-form");
  const Mod4 c = mod4_of(field);
  const auto f = parse_element(o.element, c, o.r);
  const auto nf = normal_form(f);
  if (!o.json) out << "element: " << f.to_string() << '\n';
  emit_class(o, out, nf, {{"element", to_json(f)}});
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  VerifyOptions vo;
  vo.random_triples = o.random_triples;
  vo.seed = o.seed;
  std::vector<CheckResult> results;
  if (o.only != 0) {
    if (o.only < 1 || o.only > 10) throw WittError("--only must be in 1..10");
    results.push_back(run_check(o.only, vo));
  } else {
    results = run_verification(vo);
  }
  bool ok = true;
  json jr = json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    if (o.json) {
      jr.push_back({{"id", r.id},
                    {"title", r.title},
                    {"passed", r.passed},
                    {"detail", r.detail},
                    {"seconds", r.seconds}});
    } else {
      out << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title
          << " (" << std::fixed << std::setprecision(2) << r.seconds << "s): "
          << r.detail << '\n';
    }
  }
  if (o.json) out << json{{"passed", ok}, {"checks", jr}}.dump(2) << '\n';
  if (!ok) err << "error: verification failed\n";
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

Vector parse_entries(const FiniteField& field, const std::string& text) {
  std::string t = trim(text);
  if (!t.empty() && t.front() == '<' && t.back() == '>') {
    t = trim(t.substr(1, t.size() - 2));
  }
  Vector out;
  if (t.empty()) return out;
  for (const auto& tok : split_top(t, ',')) out.push_back(parse_entry(field, tok));
  return out;
}

Matrix parse_gram(const FiniteField& field, const std::string& text) {
  Matrix m;
  const std::string t = trim(text);
  if (t.empty()) return m;
  for (const auto& row : split_top(t, ';')) {
    Vector r;
    for (const auto& tok : split_top(row, ',')) r.push_back(parse_entry(field, tok));
    m.push_back(std::move(r));
  }
  return m;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Witt rings of curves over nondyadic finite fields", "wittc"};
  app.require_subcommand(1);
  Options o;

  auto add_q = [&](CLI::App* sub) {
    sub->add_option("--q", o.q, "field size p or p^e (odd)")->required();
  };
  std::vector<CLI::Option*> r_options;
  auto add_r = [&](CLI::App* sub) {
    r_options.push_back(
        sub->add_option("--r", o.r, "rank of the 2-torsion Picard group")
            ->default_val(0));
  };
  auto add_json = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "emit a single JSON document");
  };

  auto* field_info = app.add_subcommand("field-info", "describe F_q");
  add_q(field_info);
  add_json(field_info);

  auto* wittk = app.add_subcommand("wittk-table", "W(k) tables and identities");
  add_q(wittk);
  add_json(wittk);

  auto* diag = app.add_subcommand("form-diag", "diagonalize a Gram matrix");
  add_q(diag);
  diag->add_option("--gram", o.gram, "rows ';'-separated, entries ','-separated")
      ->required();
  add_json(diag);

  auto* witt = app.add_subcommand("form-witt", "Witt decomposition of <a1,...,an>");
  add_q(witt);
  witt->add_option("--diag", o.diag, "diagonal entries a1,...,an")->required();
  witt->add_option("--other", o.other, "compare with another diagonal form");
  witt->add_option("--max-search", o.max_search, "isotropic search budget");
  add_json(witt);

  auto* table = app.add_subcommand("curve-table", "W(C) arithmetic tables");
  add_q(table);
  add_r(table);
  add_json(table);

  auto* eval = app.add_subcommand("curve-eval", "evaluate an orthogonal sum in W(C)");
  add_q(eval);
  add_r(eval);
  eval->add_option("--word", o.word, "letters (u,L);(v,M);...")->required();
  eval->add_option("--op", o.op, "add or mul, combined with --with");
  eval->add_option("--with", o.with, "second word");
  add_json(eval);

  auto* nf = app.add_subcommand("curve-normal-form",
                                "normal form of a W(k)[2Pic(C)] element");
  add_q(nf);
  add_r(nf);
  nf->add_option("--element", o.element,
                 "terms coef:L;... (coef in 0,1,s,e) or a JSON array")
      ->required();
  add_json(nf);

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--random-triples", o.random_triples,
                     "random ring-axiom triples per context at r = 8");
  verify->add_option("--seed", o.seed, "random seed");
  verify->add_option("--only", o.only, "run a single check (1..10)");
  add_json(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  for (const auto* opt : r_options) o.r_given = o.r_given || opt->count() > 0;

  try {
    if (*field_info) return cmd_field_info(o, out);
    if (*wittk) return cmd_wittk_table(o, out);
    if (*diag) return cmd_form_diag(o, out);
    if (*witt) return cmd_form_witt(o, out);
    if (*table) return cmd_curve_table(o, out);
    if (*eval) return cmd_curve_eval(o, out);
    if (*nf) return cmd_curve_normal_form(o, out);
    if (*verify) return cmd_verify(o, out, err);
  } catch (const WittError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace wittc::cli
