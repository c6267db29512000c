#include "casimir/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace casimir {

namespace {

ThermoResult evaluate(const RunConfig& cfg, const Reflector& r, double a, double T) {
  switch (cfg.quantity) {
    case Quantity::FreeEnergy:
      return free_energy(r, make_plate_system(a, T), cfg.quadrature, Execution::Serial);
    case Quantity::Pressure:
      return pressure(r, a, T, cfg.derivative, cfg.quadrature, Execution::Serial);
    case Quantity::Entropy:
      return entropy(r, a, T, cfg.derivative, cfg.quadrature, Execution::Serial);
  }
  throw std::logic_error("unhandled quantity");
}

std::string quantity_symbol(Quantity q) {
  switch (q) {
    case Quantity::FreeEnergy: return "F";
    case Quantity::Pressure: return "P";
    case Quantity::Entropy: return "S";
  }
  return "";
}

std::string quantity_unit(Quantity q) {
  switch (q) {
    case Quantity::FreeEnergy: return "J/m^2";
    case Quantity::Pressure: return "Pa";
    case Quantity::Entropy: return "J/(K m^2)";
  }
  return "";
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

}  // namespace

bool SweepTable::all_converged() const {
  for (const auto& s : series) {
    if (std::find(s.converged.begin(), s.converged.end(), false) != s.converged.end()) return false;
  }
  return true;
}

SweepTable run_sweep(const RunConfig& cfg) {
  validate(cfg);
  const bool over_T = cfg.command != Command::SweepA;
  SweepTable t;
  t.axis_name = over_T ? "T" : "a";
  t.axis_unit = over_T ? "K" : "m";
  const std::string sym = quantity_symbol(cfg.quantity);
  t.quantity = cfg.magnitude ? "|" + sym + "|" : sym;
  t.unit = quantity_unit(cfg.quantity);
  t.axis = cfg.range.grid();

  const long n_pts = static_cast<long>(t.axis.size());
  const long n_mat = static_cast<long>(cfg.materials.size());
  std::vector<ThermoResult> out(static_cast<std::size_t>(n_pts * n_mat));
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (long k = 0; k < n_pts * n_mat; ++k) {
    const long i = k / n_mat;
    const long m = k % n_mat;
    const double x = t.axis[static_cast<std::size_t>(i)];
    try {
      out[static_cast<std::size_t>(k)] = over_T ? evaluate(cfg, cfg.materials[m].reflector, cfg.a, x)
                                                : evaluate(cfg, cfg.materials[m].reflector, x, cfg.T);
    } catch (...) {
#pragma omp critical(casimir_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  for (long m = 0; m < n_mat; ++m) {
    SweepSeries s;
    s.label = cfg.materials[static_cast<std::size_t>(m)].label;
    for (long i = 0; i < n_pts; ++i) {
      const auto& r = out[static_cast<std::size_t>(i * n_mat + m)];
      if (!std::isfinite(r.value)) {
        throw std::runtime_error("non-finite " + sym + " for " + s.label + " at " + t.axis_name + " = " +
                                 fmt(t.axis[static_cast<std::size_t>(i)]));
      }
      s.values.push_back(cfg.magnitude ? std::abs(r.value) : r.value);
      s.converged.push_back(r.converged);
    }
    t.series.push_back(std::move(s));
  }
  return t;
}

SweepOutcome outcome(const SweepTable& t) {
  return t.all_converged() ? SweepOutcome::Complete : SweepOutcome::CompleteWithWarnings;
}

void write_csv(const SweepTable& t, std::ostream& os) {
  os << t.axis_name << " (" << t.axis_unit << ")";
  for (const auto& s : t.series) {
    os << ',' << t.quantity << ' ' << s.label << " (" << t.unit << ")" << ",converged " << s.label;
  }
  os << '\n';
  for (std::size_t i = 0; i < t.axis.size(); ++i) {
    os << fmt(t.axis[i]);
    for (const auto& s : t.series) os << ',' << fmt(s.values[i]) << ',' << (s.converged[i] ? 1 : 0);
    os << '\n';
  }
}

void write_svg(const SweepTable& t, std::ostream& os, const std::string& title) {
  constexpr double W = 720, H = 480, L = 90, R = 160, T = 40, B = 60;
  double xmin = t.axis.front(), xmax = t.axis.back();
  double ymin = std::numeric_limits<double>::max(), ymax = 0.0;
  for (const auto& s : t.series) {
    for (double v : s.values) {
      const double a = std::abs(v);
      if (a > 0.0) {
        ymin = std::min(ymin, a);
        ymax = std::max(ymax, a);
      }
    }
  }
  if (!(ymax > 0.0)) ymin = 1.0, ymax = 10.0;
  if (ymin == ymax) ymin *= 0.9, ymax *= 1.1;
  const double lx0 = std::log10(xmin), lx1 = std::log10(xmax);
  const double ly0 = std::log10(ymin), ly1 = std::log10(ymax);
  auto px = [&](double x) { return L + (std::log10(x) - lx0) / (lx1 - lx0) * (W - L - R); };
  auto py = [&](double y) { return H - B - (std::log10(y) - ly0) / (ly1 - ly0) * (H - T - B); };

  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">"
     << title << "</text>\n";
  os << "<rect x=\"" << L << "\" y=\"" << T << "\" width=\"" << W - L - R << "\" height=\"" << H - T - B
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  os << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 15
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << t.axis_name << " ("
     << t.axis_unit << ")</text>\n";
  os << "<text x=\"20\" y=\"" << (T + H - B) / 2 << "\" transform=\"rotate(-90 20 " << (T + H - B) / 2
     << ")\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">|" << t.quantity << "| ("
     << t.unit << ")</text>\n";
  for (int k = 0; k <= 4; ++k) {
    const double fx = lx0 + k * (lx1 - lx0) / 4, fy = ly0 + k * (ly1 - ly0) / 4;
    os << "<text x=\"" << px(std::pow(10, fx)) << "\" y=\"" << H - B + 18
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << fmt(std::pow(10, fx)).substr(0, 6)
       << "</text>\n";
    os << "<text x=\"" << L - 6 << "\" y=\"" << py(std::pow(10, fy)) + 4
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << std::setprecision(3)
       << std::pow(10, fy) << "</text>\n";
  }
  for (std::size_t k = 0; k < t.series.size(); ++k) {
    const auto& s = t.series[k];
    const char* c = colors[k % 6];
    os << "<polyline fill=\"none\" stroke=\"" << c << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < t.axis.size(); ++i) {
      const double v = std::abs(s.values[i]);
      if (v > 0.0) os << px(t.axis[i]) << ',' << py(v) << ' ';
    }
    os << "\"/>\n";
    os << "<text x=\"" << W - R + 10 << "\" y=\"" << T + 20 + 18 * k << "\" fill=\"" << c
       << "\" font-family=\"sans-serif\" font-size=\"12\">" << s.label << "</text>\n";
  }
  os << "</svg>\n";
}

}  // namespace casimir
