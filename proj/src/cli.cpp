#include "subsums/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "subsums/errors.hpp"
#include "subsums/report_io.hpp"

namespace subsums {

namespace {

std::vector<long long> parse_weight_list(const std::string& s) {
  std::vector<long long> k;
  std::istringstream list(s);
  std::string item;
  while (std::getline(list, item, ',')) {
    try {
      std::size_t pos = 0;
      long long v = std::stoll(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      k.push_back(v);
    } catch (const std::exception&) {
      throw DomainError("bad weight '" + item + "'");
    }
  }
  if (k.empty()) throw DomainError("empty weight list");
  return k;
}

std::vector<long long> parse_depth_list(const std::string& s) {
  std::vector<long long> d;
  std::istringstream list(s);
  std::string item;
  while (std::getline(list, item, ',')) {
    try {
      d.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw DomainError("bad depth '" + item + "'");
    }
  }
  return d;
}

// "lo:hi:step" with exact rational stepping
std::vector<Rational> parse_x_grid(const std::string& s) {
  auto c1 = s.find(':');
  auto c2 = s.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos) {
    throw DomainError("x-grid must be lo:hi:step");
  }
  Rational lo = Rational::parse(s.substr(0, c1));
  Rational hi = Rational::parse(s.substr(c1 + 1, c2 - c1 - 1));
  Rational step = Rational::parse(s.substr(c2 + 1));
  if (!step.positive()) throw DomainError("x-grid step must be positive");
  std::vector<Rational> grid;
  for (Rational x = lo; x <= hi; x = x + step) {
    if (!(Rational(0, 1) < x && x < Rational(1, 1))) {
      throw DomainError("x-grid value " + x.str() + " outside (0,1)");
    }
    grid.push_back(x);
    if (grid.size() > 1'000'000) throw GuardError("x-grid larger than 1e6 points");
  }
  if (grid.size() < 2) throw DomainError("x-grid needs at least 2 points");
  return grid;
}

Classification classify_any(const SeriesSpec& spec) {
  if (spec.kind() == SeriesKind::Sine) return classify_sine(spec);
  if (spec.kind() == SeriesKind::Multigeometric) return classify_multigeometric(spec);
  throw DomainError("classify supports sine and mgs series");
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw DomainError("cannot open output file '" + out_path + "'");
  f << text;
}

struct Options {
  std::string series;
  std::string series_a, series_c, series_b;
  std::string k_list;
  std::string x_grid;
  std::string depths = "8,12,16";
  std::string format = "json";
  std::string out_path;
  long long depth = 16;
  long long horizon = 64;
  bool mitm = false;
};

int dispatch(const std::string& command, const Options& o, std::ostream& out) {
  const bool csv = o.format == "csv";
  if (command == "classify") {
    Classification c = classify_any(SeriesSpec::parse(o.series));
    emit(to_json(c).dump(2), o.out_path, out);
  } else if (command == "sumset") {
    std::vector<long long> k = parse_weight_list(o.k_list);
    SumsetInfo s = o.mitm ? sumset_meet_in_middle(k) : sumset(k);
    emit(to_json(s).dump(2), o.out_path, out);
  } else if (command == "cover") {
    CoverResult c = outer_cover(SeriesSpec::parse(o.series), o.depth);
    emit(csv ? to_csv(c) : to_json(c).dump(2), o.out_path, out);
  } else if (command == "measure") {
    auto m = measure_estimate(SeriesSpec::parse(o.series), o.depth);
    emit(csv ? to_csv(m) : to_json(m).dump(2), o.out_path, out);
  } else if (command == "dimension") {
    auto d = box_dimension_estimate(SeriesSpec::parse(o.series), parse_depth_list(o.depths));
    emit(csv ? to_csv(d) : to_json(d).dump(2), o.out_path, out);
  } else if (command == "sandwich") {
    SeriesSpec a = SeriesSpec::parse(o.series_a);
    SeriesSpec c = SeriesSpec::parse(o.series_c);
    SeriesSpec b = SeriesSpec::parse(o.series_b);
    SandwichReport r = sandwich_check(a, c, b, o.horizon);
    emit(csv ? to_csv(r) : to_json(r).dump(2), o.out_path, out);
  } else if (command == "scan") {
    std::vector<long long> k = parse_weight_list(o.k_list);
    std::vector<Rational> grid = parse_x_grid(o.x_grid);
    std::string csv_text = "x,label,theorem\n";
    Json rows = Json::array();
    for (const Rational& x : grid) {
      Classification c = classify_sine(SeriesSpec::sine(k, x));
      std::string theorem = c.certificates.empty() ? "" : c.certificates.front().theorem;
      csv_text += x.str() + "," + label_name(c.label) + "," + theorem + "\n";
      Json row;
      row["x"] = x.str();
      row["label"] = label_name(c.label);
      row["theorem"] = theorem;
      rows.push_back(row);
    }
    emit(csv ? csv_text : rows.dump(2), o.out_path, out);
  } else {
    throw DomainError("unknown command '" + command + "'");
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"classification and finite-depth approximation of sets of subsums"};
  app.require_subcommand(1);

  Options o;
  const char* names[] = {"classify", "scan", "cover", "measure", "dimension", "sumset", "sandwich"};
  const char* descs[] = {
      "classify a series by its certified thresholds",
      "classify a sine family over an x grid",
      "finite-depth outer cover and gap structure",
      "upper bounds on the Lebesgue measure by depth",
      "box-counting dimension estimate",
      "subset sums of a weight vector with the longest run",
      "per-index inequality chains between three series",
  };
  for (int i = 0; i < 7; ++i) {
    CLI::App* sub = app.add_subcommand(names[i], descs[i]);
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", o.out_path, "write the report to a file");
    if (std::string(names[i]) == "classify" || std::string(names[i]) == "cover" ||
        std::string(names[i]) == "measure" || std::string(names[i]) == "dimension") {
      sub->add_option("--series", o.series, "series text, e.g. \"sine k=2,1 x=1/2\"")->required();
    }
    if (std::string(names[i]) == "cover" || std::string(names[i]) == "measure") {
      sub->add_option("--depth", o.depth, "enumeration depth (default 16)");
    }
    if (std::string(names[i]) == "dimension") {
      sub->add_option("--depths", o.depths, "comma list of depths (default 8,12,16)");
    }
    if (std::string(names[i]) == "sumset" || std::string(names[i]) == "scan") {
      sub->add_option("--k", o.k_list, "comma list of weights")->required();
    }
    if (std::string(names[i]) == "sumset") {
      sub->add_flag("--mitm", o.mitm, "meet-in-the-middle enumeration for m > 24");
    }
    if (std::string(names[i]) == "scan") {
      sub->add_option("--x-grid", o.x_grid, "grid lo:hi:step with exact rationals")->required();
    }
    if (std::string(names[i]) == "sandwich") {
      sub->add_option("--a", o.series_a, "lower series")->required();
      sub->add_option("--c", o.series_c, "middle series")->required();
      sub->add_option("--b", o.series_b, "upper series")->required();
      sub->add_option("--horizon", o.horizon, "indices to check (default 64)");
    }
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    for (const char* name : names) {
      if (app.get_subcommand(name)->parsed()) return dispatch(name, o, out);
    }
    err << "error: no command given\n";
    return 2;
  } catch (const GuardError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace subsums
