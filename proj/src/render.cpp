#include "apollo/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace apollo {

namespace {

Int pow10(unsigned k) {
    Int r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= 10;
    }
    return r;
}

constexpr unsigned kSigDigits = 12;

}  // namespace

std::string format_decimal(const Rat& value) {
    Int num = boost::multiprecision::numerator(value);
    Int den = boost::multiprecision::denominator(value);
    if (num == 0) {
        return "0";
    }
    bool negative = num < 0;
    Int a = negative ? Int(-num) : num;

    // Decimal exponent e with 10^e <= a/den < 10^(e+1).
    long e = 0;
    if (a >= den) {
        e = static_cast<long>(Int(a / den).str().size()) - 1;
    } else {
        Int scaled = a;
        while (scaled < den) {
            scaled *= 10;
            --e;
        }
    }

    // First kSigDigits digits, rounded half up.
    long shift = static_cast<long>(kSigDigits) - 1 - e;
    Int scaled_num = a;
    Int scaled_den = den;
    if (shift >= 0) {
        scaled_num *= pow10(static_cast<unsigned>(shift));
    } else {
        scaled_den *= pow10(static_cast<unsigned>(-shift));
    }
    Int digits = (2 * scaled_num + scaled_den) / (2 * scaled_den);
    if (digits == pow10(kSigDigits)) {
        digits /= 10;
        ++e;
    }

    std::string ds = digits.str();
    std::string out;
    if (e >= static_cast<long>(kSigDigits) - 1) {
        out = ds + std::string(static_cast<size_t>(e) - kSigDigits + 1, '0');
    } else if (e >= 0) {
        out = ds.substr(0, static_cast<size_t>(e) + 1) + "." +
              ds.substr(static_cast<size_t>(e) + 1);
    } else {
        out = "0." + std::string(static_cast<size_t>(-e) - 1, '0') + ds;
    }
    if (out.find('.') != std::string::npos) {
        size_t last = out.find_last_not_of('0');
        if (out[last] == '.') {
            --last;
        }
        out.erase(last + 1);
    }
    return (negative ? "-" : "") + out;
}

namespace {

struct Mapper {
    Rat x0, y1, scale;

    Rat px(const Rat& x) const { return (x - x0) * scale; }
    Rat py(const Rat& y) const { return (y1 - y) * scale; }
};

std::string fmt2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

double to_double(const Rat& r) {
    return boost::multiprecision::numerator(r).convert_to<double>() /
           boost::multiprecision::denominator(r).convert_to<double>();
}

}  // namespace

std::string to_svg(const Packing& p, const RenderOptions& opts) {
    VerificationReport rep = verify_packing(p);
    if (!rep.all_ok()) {
        throw VerificationFailedError("to_svg: packing failed verification");
    }
    if (opts.pixel_width <= 0 || !opts.viewport.valid() ||
        opts.viewport.x0 == opts.viewport.x1 || opts.viewport.y0 == opts.viewport.y1) {
        throw std::invalid_argument("to_svg: degenerate render options");
    }

    const RatRect& vp = opts.viewport;
    Rat scale = Rat(opts.pixel_width) / (vp.x1 - vp.x0);
    Rat height = (vp.y1 - vp.y0) * scale;
    Mapper map{vp.x0, vp.y1, scale};

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
        << format_decimal(Rat(opts.pixel_width)) << "\" height=\""
        << format_decimal(height) << "\" viewBox=\"0 0 "
        << format_decimal(Rat(opts.pixel_width)) << " " << format_decimal(height)
        << "\">\n";
    svg << "<defs><marker id=\"tip\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" "
           "refY=\"3\" orient=\"auto\"><path d=\"M0,0 L6,3 L0,6 z\"/></marker></defs>\n";

    svg << "<g fill=\"none\" stroke=\"black\" stroke-width=\""
        << format_decimal(opts.stroke_width_px) << "\">\n";
    struct Label {
        Rat x, y, size;
        Int curv;
    };
    std::vector<Label> labels;
    for (const DiskSymbol& d : p.disks) {
        if (d.curv != 0) {
            Rat cx = make_rat(d.xdot, d.curv);
            Rat cy = make_rat(d.ydot, d.curv);
            Rat r = boost::multiprecision::abs(make_rat(1, d.curv));
            if (cx + r < vp.x0 || cx - r > vp.x1 || cy + r < vp.y0 || cy - r > vp.y1) {
                continue;
            }
            Rat rpx = r * scale;
            svg << "<circle cx=\"" << format_decimal(map.px(cx)) << "\" cy=\""
                << format_decimal(map.py(cy)) << "\" r=\"" << format_decimal(rpx)
                << "\"/>\n";
            if (rpx >= opts.label_min_radius_px) {
                labels.push_back({cx, cy, rpx * Rat(4, 5), d.curv});
            }
        } else {
            // Unit normals with integer components are axis-aligned, so the
            // boundary is a vertical or horizontal line.
            Rat off = make_rat(d.cocurv, 2);
            if (d.ydot == 0) {
                Rat x = off / Rat(d.xdot);
                if (x < vp.x0 || x > vp.x1) {
                    continue;
                }
                svg << "<line x1=\"" << format_decimal(map.px(x)) << "\" y1=\""
                    << format_decimal(map.py(vp.y0)) << "\" x2=\""
                    << format_decimal(map.px(x)) << "\" y2=\""
                    << format_decimal(map.py(vp.y1)) << "\"/>\n";
            } else {
                Rat y = off / Rat(d.ydot);
                if (y < vp.y0 || y > vp.y1) {
                    continue;
                }
                svg << "<line x1=\"" << format_decimal(map.px(vp.x0)) << "\" y1=\""
                    << format_decimal(map.py(y)) << "\" x2=\""
                    << format_decimal(map.px(vp.x1)) << "\" y2=\""
                    << format_decimal(map.py(y)) << "\"/>\n";
            }
        }
    }
    svg << "</g>\n";

    svg << "<g font-family=\"sans-serif\" text-anchor=\"middle\">\n";
    for (const Label& l : labels) {
        svg << "<text x=\"" << format_decimal(map.px(l.x)) << "\" y=\""
            << format_decimal(map.py(l.y)) << "\" font-size=\""
            << format_decimal(l.size) << "\" dominant-baseline=\"central\">" << l.curv
            << "</text>\n";
    }
    svg << "</g>\n";

    if (opts.draw_spinors) {
        svg << "<g stroke=\"purple\" fill=\"purple\" font-family=\"sans-serif\" "
               "font-size=\"12\">\n";
        for (const TangencyEdge& e : p.tangencies) {
            const DiskSymbol& a = p.disks[e.a];
            const DiskSymbol& b = p.disks[e.b];
            if (a.curv == 0 && b.curv == 0) {
                continue;  // contact at infinity, nothing to draw
            }
            RatPoint t = tangency_point(a, b);
            if (t.x < vp.x0 || t.x > vp.x1 || t.y < vp.y0 || t.y > vp.y1) {
                continue;
            }
            double cx = to_double(map.px(t.x));
            double cy = to_double(map.py(t.y));
            // Arrow direction: into disk b at the contact point.
            double dx, dy;
            if (b.curv != 0) {
                double bcx = to_double(map.px(make_rat(b.xdot, b.curv)));
                double bcy = to_double(map.py(make_rat(b.ydot, b.curv)));
                dx = bcx - cx;
                dy = bcy - cy;
                if (b.curv < 0) {
                    dx = -dx;
                    dy = -dy;
                }
            } else {
                dx = static_cast<double>(b.xdot.convert_to<long>());
                dy = -static_cast<double>(b.ydot.convert_to<long>());
            }
            double len = std::hypot(dx, dy);
            if (len == 0) {
                dx = 1;
                dy = 0;
                len = 1;
            }
            dx /= len;
            dy /= len;
            const double half = 7.0;
            svg << "<line x1=\"" << fmt2(cx - half * dx) << "\" y1=\""
                << fmt2(cy - half * dy) << "\" x2=\"" << fmt2(cx + half * dx)
                << "\" y2=\"" << fmt2(cy + half * dy)
                << "\" stroke-width=\"2\" marker-end=\"url(#tip)\"/>\n";
            svg << "<text x=\"" << fmt2(cx - 10 * dy) << "\" y=\"" << fmt2(cy + 10 * dx)
                << "\" stroke=\"none\">[" << e.spinor.m << "," << e.spinor.n
                << "]</text>\n";
        }
        svg << "</g>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace apollo
