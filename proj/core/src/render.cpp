#include "plancalc/render.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace plancalc {

namespace {

std::string num(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(1) << v;
  return os.str();
}

std::string stroke(int letter) {
  return letter > 0 ? R"( stroke="black" fill="none")" : R"( stroke="black" fill="none" stroke-dasharray="4 3")";
}

}  // namespace

std::string render_svg(const SlicePlan& plan, const RenderOptions& opt) {
  const double u = opt.unit;
  int width = 1;
  for (const auto& w : plan.words) width = std::max(width, static_cast<int>(w.size()));
  for (std::size_t s = 0; s < plan.slices.size(); ++s)
    if (plan.slices[s].kind == Slice::Box)
      width = std::max(width, plan.slices[s].pos + 2 * plan.internal[plan.slices[s].disc - 1].k);
  const int rows = static_cast<int>(plan.slices.size());
  const double W = u * (width + 1), H = u * (rows + 2);
  auto x = [&](double i) { return u * (i + 1); };
  // Slice s occupies y in [yb(s+1), yb(s)]; y grows downward.
  auto yb = [&](int s) { return H - u * (s + 1); };

  std::ostringstream os;
  os << R"(<svg xmlns="http://www.w3.org/2000/svg" width=")" << num(W) << R"(" height=")" << num(H)
     << R"(" viewBox="0 0 )" << num(W) << " " << num(H) << R"(">)" << "\n";
  os << R"(<rect x="1" y="1" width=")" << num(W - 2) << R"(" height=")" << num(H - 2)
     << R"(" stroke="gray" fill="none"/>)" << "\n";
  for (int s = 0; s < rows; ++s) {
    const Slice& sl = plan.slices[s];
    const auto& below = plan.words[s];
    const double y0 = yb(s), y1 = yb(s + 1), ym = (y0 + y1) / 2;
    auto line = [&](int a, int b, int letter) {
      os << R"(<path d="M )" << num(x(a)) << " " << num(y0) << " L " << num(x(b)) << " " << num(y1) << R"(")"
         << stroke(letter) << "/>\n";
    };
    if (sl.kind == Slice::Cup) {
      for (int i = 0; i < static_cast<int>(below.size()); ++i) line(i, i < sl.pos ? i : i + 2, below[i]);
      const auto& above = plan.words[s + 1];
      os << R"(<path d="M )" << num(x(sl.pos)) << " " << num(y1) << " Q " << num(x(sl.pos + 0.5)) << " "
         << num(y0 + u / 2) << " " << num(x(sl.pos + 1)) << " " << num(y1) << R"(")" << stroke(above[sl.pos]) << "/>\n";
    } else if (sl.kind == Slice::Cap) {
      for (int i = 0; i < static_cast<int>(below.size()); ++i)
        if (i != sl.pos && i != sl.pos + 1) line(i, i < sl.pos ? i : i - 2, below[i]);
      os << R"(<path d="M )" << num(x(sl.pos)) << " " << num(y0) << " Q " << num(x(sl.pos + 0.5)) << " "
         << num(y1 - u / 2) << " " << num(x(sl.pos + 1)) << " " << num(y0) << R"(")" << stroke(below[sl.pos]) << "/>\n";
    } else {
      const int k = plan.internal[sl.disc - 1].k;
      for (int i = 0; i < static_cast<int>(below.size()); ++i) {
        if (i >= sl.pos && i < sl.pos + k) {
          os << R"(<path d="M )" << num(x(i)) << " " << num(y0) << " L " << num(x(i)) << " " << num(ym + u / 4)
             << R"(")" << stroke(below[i]) << "/>\n";
          os << R"(<path d="M )" << num(x(i)) << " " << num(ym - u / 4) << " L " << num(x(i)) << " " << num(y1)
             << R"(")" << stroke(plan.words[s + 1][i]) << "/>\n";
        } else {
          line(i, i, below[i]);
        }
      }
      const double bx = x(sl.pos) - u / 3, bw = std::max(k - 1, 0) * u + 2 * u / 3;
      os << R"(<rect x=")" << num(bx) << R"(" y=")" << num(ym - u / 4) << R"(" width=")" << num(bw)
         << R"(" height=")" << num(u / 2) << R"(" stroke="black" fill="white"/>)" << "\n";
      // Marked corner: bottom left.
      os << R"(<circle cx=")" << num(bx) << R"(" cy=")" << num(ym + u / 4) << R"(" r="2" fill="black"/>)" << "\n";
      if (opt.labels)
        os << R"(<text x=")" << num(bx + bw / 2) << R"(" y=")" << num(ym + u / 8)
           << R"(" font-size="10" text-anchor="middle">D)" << sl.disc << "</text>\n";
    }
  }
  if (opt.labels)
    os << R"(<text x="4" y=")" << num(H - 4) << R"(" font-size="10">)" << plan.external.str() << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

std::string render_svg(const PlanarTangle& T, std::uint64_t seed, const RenderOptions& opt) {
  return render_svg(standard_form(T, seed), opt);
}

}  // namespace plancalc
