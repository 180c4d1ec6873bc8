#pragma once

#include <iosfwd>
#include <vector>

#include "fracsum/expr.hpp"
#include "fracsum/types.hpp"

namespace fracsum {

// Default region: Re in [-4.5, 1.5], Im in [-3, 3], step 0.05.
struct GridOptions {
    double re_min = -4.5;
    double re_max = 1.5;
    double im_min = -3.0;
    double im_max = 3.0;
    double step = 0.05;
};

enum class GridStatus { ok, pole, error };

struct GridPoint {
    double re = 0.0;
    double im = 0.0;
    Complex value{};
    GridStatus status = GridStatus::ok;
};

// Evaluates z -> sum_{k=1..z} f(k) over the rectangle, row-major (im outer,
// re inner, both ascending). Points within step/2 of a closed-form pole are
// classified `pole` by proximity, not by evaluation failure.
std::vector<GridPoint> evaluate_grid(const CatalogExpr& e, const GridOptions& opt);

// Header re,im,val_re,val_im,status; pole/error rows carry empty value
// fields; 12 significant digits, '\n' line endings.
void write_grid_csv(std::ostream& os, const std::vector<GridPoint>& points);

}  // namespace fracsum
