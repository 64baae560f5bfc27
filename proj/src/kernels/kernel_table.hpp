#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>

// Internal kernel interface. Each backend fills a KernelTable; modules call
// through active(). Backends must agree bit-for-bit: per output element they
// perform the same IEEE operations in the same order as the ref:: helpers
// below, which also serve directly for border pixels and loop tails.

namespace edgechroma::kernels {

struct KernelTable {
    const char* name;

    // Interleaved 8-bit RGB -> BT.601 luma doubles.
    void (*grayscale)(const std::uint8_t* rgb, double* luma, std::size_t n);

    // Generic odd-size cross-correlation, replicate padding, "same" output.
    // Taps accumulate row-major as (value * weight) * normalizer.
    void (*convolve)(const double* src, int w, int h, const double* weights,
                     int ksize, double normalizer, double* dst);

    // Fixed [1 2 1; 2 4 2; 1 2 1]/16 blur, replicate padding, taps grouped
    // symmetrically (see ref::blur3_at) so results are exactly invariant
    // under transpose, flips and right-angle rotation.
    void (*blur3)(const double* src, int w, int h, double* dst);

    // Sobel dx and dy in one pass, same symmetric grouping guarantees as
    // blur3: sobel(F^T) is bit-for-bit (dy^T, dx^T).
    void (*sobel)(const double* src, int w, int h, double* dx, double* dy);

    // Per-element sqrt(dx^2 + dy^2).
    void (*magnitude)(const double* dx, const double* dy, double* mag,
                      std::size_t n);

    // For each point (r,g,b) find the nearest of k centroids (squared
    // Euclidean distance, ties to the lowest index). Writes the index and
    // the squared distance.
    void (*nearest_centroid)(const double* r, const double* g, const double* b,
                             std::size_t n, const double* cr, const double* cg,
                             const double* cb, int k, std::uint32_t* assign,
                             double* dist2);
};

const KernelTable& scalar_table();
#if defined(__x86_64__)
const KernelTable& avx2_table();
#endif

// Currently selected table (lazy init: CPU detection + env override).
const KernelTable& active();

namespace ref {

inline int clamp_index(int v, int hi) {
    if (v < 0) return 0;
    if (v > hi) return hi;
    return v;
}

inline double luma(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    return 0.299 * static_cast<double>(r) + 0.587 * static_cast<double>(g) +
           0.114 * static_cast<double>(b);
}

inline double convolve_at(const double* f, int w, int h, int x, int y,
                          const double* kw, int ksize, double normalizer) {
    const int r = ksize / 2;
    double acc = 0.0;
    for (int ky = 0; ky < ksize; ++ky) {
        const int yy = clamp_index(y + ky - r, h - 1);
        const double* row = f + static_cast<std::size_t>(yy) * w;
        for (int kx = 0; kx < ksize; ++kx) {
            const int xx = clamp_index(x + kx - r, w - 1);
            acc += row[xx] * kw[static_cast<std::size_t>(ky) * ksize + kx] *
                   normalizer;
        }
    }
    return acc;
}

// Blur taps t[ky][kx] are exact (weights and 1/16 are powers of two), and the
// grouping pairs taps that map onto each other under transpose and flips, so
// the blurred plane is bit-exactly equivariant under the full dihedral group.
inline double blur3_at(const double* f, int w, int h, int x, int y) {
    const int xm = clamp_index(x - 1, w - 1);
    const int xp = clamp_index(x + 1, w - 1);
    const std::size_t rm = static_cast<std::size_t>(clamp_index(y - 1, h - 1)) * w;
    const std::size_t r0 = static_cast<std::size_t>(y) * w;
    const std::size_t rp = static_cast<std::size_t>(clamp_index(y + 1, h - 1)) * w;

    const double s = 1.0 / 16.0;
    const double t00 = f[rm + xm] * s, t01 = f[rm + x] * (2.0 * s), t02 = f[rm + xp] * s;
    const double t10 = f[r0 + xm] * (2.0 * s), t11 = f[r0 + x] * (4.0 * s), t12 = f[r0 + xp] * (2.0 * s);
    const double t20 = f[rp + xm] * s, t21 = f[rp + x] * (2.0 * s), t22 = f[rp + xp] * s;

    const double corners = (t00 + t22) + (t02 + t20);
    const double edges = (t01 + t21) + (t10 + t12);
    return (corners + edges) + t11;
}

// dx: column differences weighted (1,2,1), outer taps summed before the
// center tap; dy mirrors it with rows. Under transpose the dx sequence at
// (x,y) is exactly the dy sequence at (y,x), so the pair swaps bit-for-bit;
// under flips each difference negates exactly.
inline double sobel_dx_at(const double* f, int w, int h, int x, int y) {
    const int xm = clamp_index(x - 1, w - 1);
    const int xp = clamp_index(x + 1, w - 1);
    const std::size_t rm = static_cast<std::size_t>(clamp_index(y - 1, h - 1)) * w;
    const std::size_t r0 = static_cast<std::size_t>(y) * w;
    const std::size_t rp = static_cast<std::size_t>(clamp_index(y + 1, h - 1)) * w;

    const double a = f[rm + xm] - f[rm + xp];
    const double b = 2.0 * (f[r0 + xm] - f[r0 + xp]);
    const double c = f[rp + xm] - f[rp + xp];
    return (a + c) + b;
}

inline double sobel_dy_at(const double* f, int w, int h, int x, int y) {
    const int xm = clamp_index(x - 1, w - 1);
    const int xp = clamp_index(x + 1, w - 1);
    const std::size_t rm = static_cast<std::size_t>(clamp_index(y - 1, h - 1)) * w;
    const std::size_t rp = static_cast<std::size_t>(clamp_index(y + 1, h - 1)) * w;

    const double a = f[rm + xm] - f[rp + xm];
    const double b = 2.0 * (f[rm + x] - f[rp + x]);
    const double c = f[rm + xp] - f[rp + xp];
    return (a + c) + b;
}

inline double magnitude_at(double dx, double dy) {
    return std::sqrt(dx * dx + dy * dy);
}

inline void nearest_centroid_at(double r, double g, double b, const double* cr,
                                const double* cg, const double* cb, int k,
                                std::uint32_t* assign, double* dist2) {
    double best = (r - cr[0]) * (r - cr[0]) + (g - cg[0]) * (g - cg[0]) +
                  (b - cb[0]) * (b - cb[0]);
    std::uint32_t best_index = 0;
    for (int c = 1; c < k; ++c) {
        const double dr = r - cr[c];
        const double dg = g - cg[c];
        const double db = b - cb[c];
        const double d = dr * dr + dg * dg + db * db;
        if (d < best) {
            best = d;
            best_index = static_cast<std::uint32_t>(c);
        }
    }
    *assign = best_index;
    *dist2 = best;
}

}  // namespace ref

}  // namespace edgechroma::kernels
