#include "kernel_table.hpp"

// Reference backend: straight loops over the ref:: helpers. This is the
// semantics every other backend must reproduce exactly.

namespace edgechroma::kernels {
namespace {

void grayscale_scalar(const std::uint8_t* rgb, double* luma, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint8_t* p = rgb + 3 * i;
        luma[i] = ref::luma(p[0], p[1], p[2]);
    }
}

void convolve_scalar(const double* src, int w, int h, const double* weights,
                     int ksize, double normalizer, double* dst) {
    for (int y = 0; y < h; ++y) {
        double* out = dst + static_cast<std::size_t>(y) * w;
        for (int x = 0; x < w; ++x) {
            out[x] = ref::convolve_at(src, w, h, x, y, weights, ksize, normalizer);
        }
    }
}

void blur3_scalar(const double* src, int w, int h, double* dst) {
    for (int y = 0; y < h; ++y) {
        double* out = dst + static_cast<std::size_t>(y) * w;
        for (int x = 0; x < w; ++x) {
            out[x] = ref::blur3_at(src, w, h, x, y);
        }
    }
}

void sobel_scalar(const double* src, int w, int h, double* dx, double* dy) {
    for (int y = 0; y < h; ++y) {
        const std::size_t row = static_cast<std::size_t>(y) * w;
        for (int x = 0; x < w; ++x) {
            dx[row + x] = ref::sobel_dx_at(src, w, h, x, y);
            dy[row + x] = ref::sobel_dy_at(src, w, h, x, y);
        }
    }
}

void magnitude_scalar(const double* dx, const double* dy, double* mag,
                      std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        mag[i] = ref::magnitude_at(dx[i], dy[i]);
    }
}

void nearest_scalar(const double* r, const double* g, const double* b,
                    std::size_t n, const double* cr, const double* cg,
                    const double* cb, int k, std::uint32_t* assign,
                    double* dist2) {
    for (std::size_t i = 0; i < n; ++i) {
        ref::nearest_centroid_at(r[i], g[i], b[i], cr, cg, cb, k, &assign[i],
                                 &dist2[i]);
    }
}

}  // namespace

const KernelTable& scalar_table() {
    static const KernelTable table = {
        "scalar",        grayscale_scalar, convolve_scalar, blur3_scalar,
        sobel_scalar,    magnitude_scalar, nearest_scalar,
    };
    return table;
}

}  // namespace edgechroma::kernels
