#include "fracsum/grid.hpp"

#include <cmath>
#include <ostream>

#include "fracsum/format.hpp"
#include "fracsum/sum.hpp"

namespace fracsum {

namespace {

int axis_count(double lo, double hi, double step) {
    return static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

double axis_coord(double lo, double step, int i) {
    double c = lo + i * step;
    if (std::fabs(c) < step * 1e-9) c = 0.0;  // keep the origin exact
    return c;
}

}  // namespace

std::vector<GridPoint> evaluate_grid(const CatalogExpr& e, const GridOptions& opt) {
    if (opt.step <= 0.0) throw BoundsError("grid step must be positive");
    if (opt.re_max < opt.re_min || opt.im_max < opt.im_min)
        throw BoundsError("grid range is empty");
    const int n_re = axis_count(opt.re_min, opt.re_max, opt.step);
    const int n_im = axis_count(opt.im_min, opt.im_max, opt.step);

    std::vector<GridPoint> out;
    out.reserve(static_cast<std::size_t>(n_re) * static_cast<std::size_t>(n_im));
    for (int j = 0; j < n_im; ++j) {
        const double im = axis_coord(opt.im_min, opt.step, j);
        for (int i = 0; i < n_re; ++i) {
            const double re = axis_coord(opt.re_min, opt.step, i);
            GridPoint p;
            p.re = re;
            p.im = im;
            const Complex z(re, im);
            if (bound_pole_distance(e, z) < opt.step / 2.0) {
                p.status = GridStatus::pole;
            } else {
                try {
                    p.value = frac_sum(e, 1.0, z).value;
                    p.status = GridStatus::ok;
                } catch (const Error&) {
                    p.status = GridStatus::error;
                }
            }
            out.push_back(p);
        }
    }
    return out;
}

void write_grid_csv(std::ostream& os, const std::vector<GridPoint>& points) {
    os << "re,im,val_re,val_im,status\n";
    for (const auto& p : points) {
        os << format_real(p.re) << ',' << format_real(p.im) << ',';
        switch (p.status) {
            case GridStatus::ok:
                os << format_real(p.value.real()) << ',' << format_real(p.value.imag()) << ",ok\n";
                break;
            case GridStatus::pole:
                os << ",,pole\n";
                break;
            case GridStatus::error:
                os << ",,error\n";
                break;
        }
    }
}

}  // namespace fracsum
