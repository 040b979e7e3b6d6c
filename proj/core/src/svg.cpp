#include "cb/svg.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace cb {

namespace {

constexpr double kSize = 640.0;

void emit_header(std::ostringstream& s) {
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
      << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n";
    s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

struct Mapper {
    double cx, cy, half;
    double x(double re) const { return kSize * 0.5 + (re - cx) / half * kSize * 0.45; }
    double y(double im) const { return kSize * 0.5 - (im - cy) / half * kSize * 0.45; }
    double r(double rad) const { return rad / half * kSize * 0.45; }
};

}  // namespace

std::string svg_disks(const Disk& domain, const std::vector<Disk>& disks,
                      const std::vector<Complex>& marks) {
    std::ostringstream s;
    emit_header(s);
    const Mapper m{domain.center.real(), domain.center.imag(), std::max(domain.radius, 1e-12)};
    s << "<circle cx=\"" << m.x(domain.center.real()) << "\" cy=\"" << m.y(domain.center.imag())
      << "\" r=\"" << m.r(domain.radius)
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    for (const auto& d : disks)
        s << "<circle cx=\"" << m.x(d.center.real()) << "\" cy=\"" << m.y(d.center.imag())
          << "\" r=\"" << std::max(m.r(d.radius), 1.0)
          << "\" fill=\"rgba(200,40,40,0.35)\" stroke=\"darkred\" stroke-width=\"0.5\"/>\n";
    for (const auto& p : marks)
        s << "<circle cx=\"" << m.x(p.real()) << "\" cy=\"" << m.y(p.imag())
          << "\" r=\"2\" fill=\"blue\"/>\n";
    s << "</svg>\n";
    return s.str();
}

std::string svg_cover_slices(const Car20Cover& cover, double window,
                             const std::vector<Complex>& w_slices) {
    std::ostringstream s;
    emit_header(s);
    const Mapper m{0.0, 0.0, std::max(window, 1e-12)};
    s << "<circle cx=\"" << kSize / 2 << "\" cy=\"" << kSize / 2 << "\" r=\"" << kSize * 0.45
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    int idx = 0;
    for (const auto& w : w_slices) {
        const int hue = (idx++ * 67) % 360;
        for (const auto& b : cover.balls) {
            const double d2 = std::norm(w - b.center.w);
            if (d2 > b.radius * b.radius) continue;
            const double rr = std::sqrt(b.radius * b.radius - d2);
            s << "<circle cx=\"" << m.x(b.center.z.real()) << "\" cy=\"" << m.y(b.center.z.imag())
              << "\" r=\"" << std::max(m.r(rr), 1.0) << "\" fill=\"hsla(" << hue
              << ",70%,50%,0.3)\" stroke=\"hsl(" << hue << ",70%,35%)\" stroke-width=\"0.5\"/>\n";
        }
    }
    s << "</svg>\n";
    return s.str();
}

void save_text(const std::string& text, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(Err::BadInput, "cannot write " + path);
    out << text;
}

}  // namespace cb
