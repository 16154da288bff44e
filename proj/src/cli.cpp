#include "riordan/cli.hpp"

#include <CLI11.hpp>

#include <ostream>

#include "riordan/format.hpp"
#include "riordan/moments.hpp"
#include "riordan/oeis.hpp"
#include "riordan/parse.hpp"

namespace riordan {

namespace {

Variant variant_from(const std::string& name) {
  if (name == "prop1") return Variant::prop1;
  if (name == "prop2") return Variant::prop2;
  throw std::invalid_argument("unknown variant \"" + name + "\" (prop1|prop2)");
}

struct FamilyFlags {
  std::string family;
  std::string alpha, beta;
  std::string gamma = "0";
  std::string variant = "prop2";

  void add_to(CLI::App* cmd, bool family_required = true) {
    auto* fam = cmd->add_option("--family", family, "family: lbp|orth|gen|gen-orth");
    if (family_required) fam->required();
    cmd->add_option("--alpha", alpha, "alpha parameter (rational, e.g. 1 or -2/3)");
    cmd->add_option("--beta", beta, "beta parameter (rational)");
    cmd->add_option("--gamma", gamma, "gamma parameter (gen families only)");
    cmd->add_option("--variant", variant, "recurrence start: prop1 (P1 = x-a) or prop2 (P1 = x-a-b)");
  }

  FamilyParams params() const {
    if (alpha.empty() || beta.empty())
      throw std::invalid_argument("--alpha and --beta are required for family computations");
    return FamilyParams{Rat::from_string(alpha), Rat::from_string(beta), variant_from(variant)};
  }

  GenFamilyParams gen_params() const {
    if (alpha.empty() || beta.empty())
      throw std::invalid_argument("--alpha and --beta are required for family computations");
    return GenFamilyParams{Rat::from_string(alpha), Rat::from_string(beta), Rat::from_string(gamma)};
  }

  Triangle coefficient_triangle(int rows) const {
    if (family == "lbp") return lbp_triangle(params(), rows).coeffs;
    if (family == "orth") return assoc_orthogonal(params(), rows).coeffs;
    if (family == "gen") return gen_triangle(gen_params(), rows).coeffs;
    if (family == "gen-orth") return gen_assoc_orthogonal(gen_params(), rows).coeffs;
    throw std::invalid_argument("unknown family \"" + family + "\" (lbp|orth|gen|gen-orth)");
  }

  RiordanArray coefficient_array(int order) const {
    if (family == "lbp") return lbp_array(params(), order);
    if (family == "orth") return assoc_array(params(), order);
    if (family == "gen") return gen_array(gen_params(), order);
    if (family == "gen-orth") return gen_assoc_array(gen_params(), order);
    throw std::invalid_argument("unknown family \"" + family + "\" (lbp|orth|gen|gen-orth)");
  }
};

std::vector<Int> integer_terms(const std::string& text) {
  std::vector<Int> values;
  for (const auto& r : parse_rat_list(text)) {
    if (!r.is_integer())
      throw std::invalid_argument("OEIS terms must be integers, got " + r.to_string());
    values.push_back(r.num());
  }
  return values;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Riordan arrays, Laurent biorthogonal polynomial families, "
               "moments, Hankel transforms, and continued fractions"};
  app.require_subcommand(1);

  std::string format = "plain";
  const auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format: plain|csv|json|bfile")
        ->capture_default_str();
  };
  const auto fmt = [&] { return parse_format(format); };

  // triangle
  auto* triangle_cmd = app.add_subcommand("triangle", "coefficient triangle of a family");
  add_format(triangle_cmd);
  FamilyFlags triangle_flags;
  int triangle_rows = 0;
  triangle_flags.add_to(triangle_cmd);
  triangle_cmd->add_option("--rows", triangle_rows, "number of rows")->required();
  triangle_cmd->callback(
      [&] { out << format_triangle(triangle_flags.coefficient_triangle(triangle_rows), fmt()); });

  // inverse
  auto* inverse_cmd = app.add_subcommand("inverse", "inverse of a family's coefficient array");
  add_format(inverse_cmd);
  FamilyFlags inverse_flags;
  int inverse_rows = 0;
  inverse_flags.add_to(inverse_cmd);
  inverse_cmd->add_option("--rows", inverse_rows, "number of rows")->required();
  inverse_cmd->callback(
      [&] { out << format_triangle(triangle(inv(inverse_flags.coefficient_array(inverse_rows))), fmt()); });

  // moments
  auto* moments_cmd = app.add_subcommand("moments", "moment sequence of a family");
  add_format(moments_cmd);
  FamilyFlags moments_flags;
  int moments_n = 0;
  moments_flags.add_to(moments_cmd);
  moments_cmd->add_option("-n", moments_n, "number of terms")->required();
  moments_cmd->callback([&] {
    const RiordanArray array = moments_flags.coefficient_array(moments_n);
    out << format_sequence(inv(array).g(moments_n).coeffs(), fmt());
  });

  // hankel
  auto* hankel_cmd = app.add_subcommand("hankel", "Hankel transform of a sequence");
  add_format(hankel_cmd);
  FamilyFlags hankel_flags;
  std::string hankel_terms;
  int hankel_n = 0;
  hankel_flags.add_to(hankel_cmd, false);
  hankel_cmd->add_option("--terms", hankel_terms, "comma-separated terms");
  hankel_cmd->add_option("-n", hankel_n, "number of transform terms");
  hankel_cmd->callback([&] {
    MomentSeq seq;
    if (!hankel_terms.empty()) {
      seq.terms = parse_rat_list(hankel_terms);
      if (hankel_n == 0) hankel_n = (static_cast<int>(seq.terms.size()) + 1) / 2;
    } else {
      if (hankel_n == 0) throw std::invalid_argument("hankel: -n is required with --family");
      const RiordanArray array = hankel_flags.coefficient_array(2 * hankel_n - 1);
      seq.terms = inv(array).g(2 * hankel_n - 1).coeffs();
    }
    out << format_sequence(hankel_transform(seq, hankel_n).terms, fmt());
  });

  // cf
  auto* cf_cmd = app.add_subcommand("cf", "expand a continued fraction into a series");
  add_format(cf_cmd);
  std::string cf_type;
  std::string cf_c, cf_d, cf_b, cf_lam;
  std::string cf_alpha, cf_beta;
  int cf_n = 0;
  cf_cmd->add_option("--type", cf_type, "t (T-fraction) or j (J-fraction)")->required();
  cf_cmd->add_option("-n", cf_n, "number of series terms")->required();
  cf_cmd->add_option("--c", cf_c, "T-fraction linear coefficients");
  cf_cmd->add_option("--d", cf_d, "T-fraction numerator weights");
  cf_cmd->add_option("--b", cf_b, "J-fraction diagonal coefficients");
  cf_cmd->add_option("--lam", cf_lam, "J-fraction x^2 weights");
  cf_cmd->add_option("--alpha", cf_alpha, "use the family pattern with this alpha");
  cf_cmd->add_option("--beta", cf_beta, "use the family pattern with this beta");
  cf_cmd->callback([&] {
    Series series = Series::constant(Rat(0), 1);
    if (cf_type == "t") {
      TFraction t;
      if (!cf_c.empty() || !cf_d.empty()) {
        t.c = parse_rat_list(cf_c);
        t.d = parse_rat_list(cf_d);
      } else if (!cf_alpha.empty() && !cf_beta.empty()) {
        t = constant_tfraction(Rat::from_string(cf_alpha), Rat::from_string(cf_beta), cf_n);
      } else {
        throw std::invalid_argument("cf --type t needs --c/--d or --alpha/--beta");
      }
      series = tfraction_series(t, cf_n);
    } else if (cf_type == "j") {
      JFraction j;
      if (!cf_b.empty()) {
        j.b = parse_rat_list(cf_b);
        if (!cf_lam.empty()) j.lam = parse_rat_list(cf_lam);
      } else if (!cf_alpha.empty() && !cf_beta.empty()) {
        j = lbp_jfraction(FamilyParams{Rat::from_string(cf_alpha), Rat::from_string(cf_beta)},
                          cf_n / 2 + 1);
      } else {
        throw std::invalid_argument("cf --type j needs --b/--lam or --alpha/--beta");
      }
      series = jfraction_series(j, cf_n);
    } else {
      throw std::invalid_argument("cf --type must be t or j");
    }
    out << format_sequence(series.coeffs(), fmt());
  });

  // jfrac-from-moments
  auto* jfrac_cmd = app.add_subcommand("jfrac-from-moments",
                                       "recover J-fraction coefficients from a moment sequence");
  add_format(jfrac_cmd);
  std::string jfrac_terms;
  jfrac_cmd->add_option("--terms", jfrac_terms, "comma-separated moments")->required();
  jfrac_cmd->callback([&] {
    const JFraction j = jfraction_from_moments(MomentSeq{parse_rat_list(jfrac_terms)});
    const auto json_list = [](const std::vector<Rat>& v) {
      std::string s = "[";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += "\"" + v[i].to_string() + "\"";
      }
      return s + "]";
    };
    switch (fmt()) {
      case OutputFormat::plain:
      case OutputFormat::csv:
        out << "b: " << format_sequence(j.b, OutputFormat::plain);
        out << "lam: " << format_sequence(j.lam, OutputFormat::plain);
        break;
      case OutputFormat::json:
        out << "{\"b\":" << json_list(j.b) << ",\"lam\":" << json_list(j.lam) << "}\n";
        break;
      case OutputFormat::bfile:
        throw std::invalid_argument("b-file output does not apply to J-fraction data");
    }
  });

  // riordan
  auto* riordan_cmd = app.add_subcommand("riordan", "triangle of a raw Riordan array (g, f)");
  add_format(riordan_cmd);
  std::string riordan_g, riordan_f;
  int riordan_rows = 0;
  bool riordan_inverse = false;
  riordan_cmd->add_option("--g", riordan_g, "generator g as a rational function")->required();
  riordan_cmd->add_option("--f", riordan_f, "generator f as a rational function")->required();
  riordan_cmd->add_option("--rows", riordan_rows, "number of rows")->required();
  riordan_cmd->add_flag("--inverse", riordan_inverse, "emit the inverse array instead");
  riordan_cmd->callback([&] {
    RiordanArray array(parse_ratfunc(riordan_g), parse_ratfunc(riordan_f), riordan_rows);
    out << format_triangle(triangle(riordan_inverse ? inv(array) : array), fmt());
  });

  // derivative
  auto* derivative_cmd = app.add_subcommand("derivative", "coefficients of R_n = d/dx P_{n+1}");
  add_format(derivative_cmd);
  FamilyFlags derivative_flags;
  int derivative_rows = 0;
  derivative_flags.add_to(derivative_cmd, false);
  derivative_cmd->add_option("--rows", derivative_rows, "number of rows")->required();
  derivative_cmd->callback(
      [&] { out << format_triangle(derivative_triangle(derivative_flags.params(), derivative_rows), fmt()); });

  // detrep
  auto* detrep_cmd = app.add_subcommand("detrep", "P_n via the Hessenberg determinant representation");
  add_format(detrep_cmd);
  FamilyFlags detrep_flags;
  int detrep_n = 0;
  detrep_flags.add_to(detrep_cmd, false);
  detrep_cmd->add_option("-n", detrep_n, "polynomial index")->required();
  detrep_cmd->callback(
      [&] { out << format_sequence(det_representation(detrep_flags.params(), detrep_n), fmt()); });

  // rowsums
  auto* rowsums_cmd = app.add_subcommand("rowsums", "row sums of a (possibly inverted) triangle");
  add_format(rowsums_cmd);
  FamilyFlags rowsums_flags;
  std::string rowsums_g, rowsums_f;
  int rowsums_rows = 0;
  bool rowsums_inverse = false;
  rowsums_flags.add_to(rowsums_cmd, false);
  rowsums_cmd->add_option("--g", rowsums_g, "generator g as a rational function");
  rowsums_cmd->add_option("--f", rowsums_f, "generator f as a rational function");
  rowsums_cmd->add_option("--rows", rowsums_rows, "number of rows")->required();
  rowsums_cmd->add_flag("--inverse", rowsums_inverse, "sum the inverse array's rows");
  rowsums_cmd->callback([&] {
    Triangle t;
    if (!rowsums_g.empty() || !rowsums_f.empty()) {
      RiordanArray array(parse_ratfunc(rowsums_g), parse_ratfunc(rowsums_f), rowsums_rows);
      t = triangle(rowsums_inverse ? inv(array) : array);
    } else {
      const RiordanArray array = rowsums_flags.coefficient_array(rowsums_rows);
      t = rowsums_inverse ? triangle(inv(array)) : rowsums_flags.coefficient_triangle(rowsums_rows);
    }
    out << format_sequence(row_sums(t), fmt());
  });

  // oeis-match
  auto* oeis_cmd = app.add_subcommand("oeis-match", "look up a sequence in the OEIS fixtures/cache");
  add_format(oeis_cmd);
  std::string oeis_terms;
  bool oeis_live = false;
  OeisOptions oeis_options;
  oeis_cmd->add_option("--terms", oeis_terms, "comma-separated integer terms")->required();
  oeis_cmd->add_flag("--live", oeis_live, "query the OEIS over HTTP (default is offline)");
  oeis_cmd->add_option("--timeout", oeis_options.timeout_ms, "HTTP timeout in milliseconds");
  oeis_cmd->add_option("--cache-dir", oeis_options.cache_dir, "cache directory");
  oeis_cmd->add_option("--fixtures-dir", oeis_options.fixtures_dir, "vendored fixtures directory");
  oeis_cmd->add_option("--endpoint", oeis_options.endpoint, "OEIS endpoint");
  oeis_cmd->callback([&] {
    OeisClient client(oeis_options);
    const auto matches =
        client.match(integer_terms(oeis_terms), oeis_live ? LookupMode::live : LookupMode::offline);
    const OutputFormat f = fmt();
    if (f == OutputFormat::json) {
      std::string body = "{\"matches\":[";
      for (std::size_t i = 0; i < matches.size(); ++i) {
        if (i) body += ",";
        body += "\"" + matches[i].id + "\"";
      }
      out << body << "]}\n";
    } else if (f == OutputFormat::plain || f == OutputFormat::csv) {
      for (const auto& m : matches) out << m.id << "\n";
    } else {
      throw std::invalid_argument("b-file output does not apply to OEIS matches");
    }
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  } catch (const NetworkError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const ComputeError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace riordan
