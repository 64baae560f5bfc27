#if defined(__x86_64__)

#include <immintrin.h>

#include <limits>

#include "kernel_table.hpp"

// AVX2 variants, four doubles per step. Lanes run the same IEEE operation
// sequence as the ref:: helpers (explicit mul/add, no FMA), so outputs are
// bit-identical to the scalar backend. Border pixels and tails fall back to
// the shared per-pixel helpers.

namespace edgechroma::kernels {
namespace {

const __m128i kGatherR = _mm_setr_epi8(0, -1, -1, -1, 3, -1, -1, -1, 6, -1, -1, -1, 9, -1, -1, -1);
const __m128i kGatherG = _mm_setr_epi8(1, -1, -1, -1, 4, -1, -1, -1, 7, -1, -1, -1, 10, -1, -1, -1);
const __m128i kGatherB = _mm_setr_epi8(2, -1, -1, -1, 5, -1, -1, -1, 8, -1, -1, -1, 11, -1, -1, -1);

void grayscale_avx2(const std::uint8_t* rgb, double* luma, std::size_t n) {
    const __m256d wr = _mm256_set1_pd(0.299);
    const __m256d wg = _mm256_set1_pd(0.587);
    const __m256d wb = _mm256_set1_pd(0.114);

    std::size_t i = 0;
    // The 16-byte load covers pixels i..i+4, so stop one pixel early.
    if (n >= 6) {
        for (; i + 5 < n; i += 4) {
            const __m128i raw = _mm_loadu_si128(
                reinterpret_cast<const __m128i*>(rgb + 3 * i));
            const __m256d r = _mm256_cvtepi32_pd(_mm_shuffle_epi8(raw, kGatherR));
            const __m256d g = _mm256_cvtepi32_pd(_mm_shuffle_epi8(raw, kGatherG));
            const __m256d b = _mm256_cvtepi32_pd(_mm_shuffle_epi8(raw, kGatherB));
            const __m256d lum = _mm256_add_pd(
                _mm256_add_pd(_mm256_mul_pd(wr, r), _mm256_mul_pd(wg, g)),
                _mm256_mul_pd(wb, b));
            _mm256_storeu_pd(luma + i, lum);
        }
    }
    for (; i < n; ++i) {
        const std::uint8_t* p = rgb + 3 * i;
        luma[i] = ref::luma(p[0], p[1], p[2]);
    }
}

void convolve_avx2(const double* src, int w, int h, const double* weights,
                   int ksize, double normalizer, double* dst) {
    const int r = ksize / 2;
    const __m256d vnorm = _mm256_set1_pd(normalizer);

    for (int y = 0; y < h; ++y) {
        double* out = dst + static_cast<std::size_t>(y) * w;
        int x = 0;
        if (y >= r && y + r < h) {
            for (; x < r && x < w; ++x) {
                out[x] = ref::convolve_at(src, w, h, x, y, weights, ksize, normalizer);
            }
            // Lanes x..x+3 with the whole window in bounds.
            for (; x + 3 + r <= w - 1; x += 4) {
                __m256d acc = _mm256_setzero_pd();
                for (int ky = 0; ky < ksize; ++ky) {
                    const double* row =
                        src + static_cast<std::size_t>(y + ky - r) * w;
                    const double* kw = weights + static_cast<std::size_t>(ky) * ksize;
                    for (int kx = 0; kx < ksize; ++kx) {
                        const __m256d v = _mm256_loadu_pd(row + (x + kx - r));
                        const __m256d term = _mm256_mul_pd(
                            _mm256_mul_pd(v, _mm256_set1_pd(kw[kx])), vnorm);
                        acc = _mm256_add_pd(acc, term);
                    }
                }
                _mm256_storeu_pd(out + x, acc);
            }
        }
        for (; x < w; ++x) {
            out[x] = ref::convolve_at(src, w, h, x, y, weights, ksize, normalizer);
        }
    }
}

void blur3_avx2(const double* src, int w, int h, double* dst) {
    const __m256d s1 = _mm256_set1_pd(1.0 / 16.0);
    const __m256d s2 = _mm256_set1_pd(2.0 / 16.0);
    const __m256d s4 = _mm256_set1_pd(4.0 / 16.0);

    for (int y = 0; y < h; ++y) {
        double* out = dst + static_cast<std::size_t>(y) * w;
        int x = 0;
        if (y >= 1 && y + 1 < h) {
            if (w >= 6) {
                out[0] = ref::blur3_at(src, w, h, 0, y);
                x = 1;
                const double* rm = src + static_cast<std::size_t>(y - 1) * w;
                const double* r0 = src + static_cast<std::size_t>(y) * w;
                const double* rp = src + static_cast<std::size_t>(y + 1) * w;
                for (; x + 4 < w; x += 4) {
                    const __m256d t00 = _mm256_mul_pd(_mm256_loadu_pd(rm + x - 1), s1);
                    const __m256d t01 = _mm256_mul_pd(_mm256_loadu_pd(rm + x), s2);
                    const __m256d t02 = _mm256_mul_pd(_mm256_loadu_pd(rm + x + 1), s1);
                    const __m256d t10 = _mm256_mul_pd(_mm256_loadu_pd(r0 + x - 1), s2);
                    const __m256d t11 = _mm256_mul_pd(_mm256_loadu_pd(r0 + x), s4);
                    const __m256d t12 = _mm256_mul_pd(_mm256_loadu_pd(r0 + x + 1), s2);
                    const __m256d t20 = _mm256_mul_pd(_mm256_loadu_pd(rp + x - 1), s1);
                    const __m256d t21 = _mm256_mul_pd(_mm256_loadu_pd(rp + x), s2);
                    const __m256d t22 = _mm256_mul_pd(_mm256_loadu_pd(rp + x + 1), s1);

                    const __m256d corners =
                        _mm256_add_pd(_mm256_add_pd(t00, t22), _mm256_add_pd(t02, t20));
                    const __m256d edges =
                        _mm256_add_pd(_mm256_add_pd(t01, t21), _mm256_add_pd(t10, t12));
                    _mm256_storeu_pd(out + x, _mm256_add_pd(_mm256_add_pd(corners, edges), t11));
                }
            }
        }
        for (; x < w; ++x) {
            out[x] = ref::blur3_at(src, w, h, x, y);
        }
    }
}

void sobel_avx2(const double* src, int w, int h, double* dx, double* dy) {
    const __m256d two = _mm256_set1_pd(2.0);

    for (int y = 0; y < h; ++y) {
        const std::size_t row = static_cast<std::size_t>(y) * w;
        int x = 0;
        if (y >= 1 && y + 1 < h && w >= 6) {
            dx[row] = ref::sobel_dx_at(src, w, h, 0, y);
            dy[row] = ref::sobel_dy_at(src, w, h, 0, y);
            x = 1;
            const double* rm = src + row - w;
            const double* r0 = src + row;
            const double* rp = src + row + w;
            for (; x + 4 < w; x += 4) {
                const __m256d rmxm = _mm256_loadu_pd(rm + x - 1);
                const __m256d rmx0 = _mm256_loadu_pd(rm + x);
                const __m256d rmxp = _mm256_loadu_pd(rm + x + 1);
                const __m256d r0xm = _mm256_loadu_pd(r0 + x - 1);
                const __m256d r0xp = _mm256_loadu_pd(r0 + x + 1);
                const __m256d rpxm = _mm256_loadu_pd(rp + x - 1);
                const __m256d rpx0 = _mm256_loadu_pd(rp + x);
                const __m256d rpxp = _mm256_loadu_pd(rp + x + 1);

                const __m256d ax = _mm256_sub_pd(rmxm, rmxp);
                const __m256d bx = _mm256_mul_pd(two, _mm256_sub_pd(r0xm, r0xp));
                const __m256d cx = _mm256_sub_pd(rpxm, rpxp);
                _mm256_storeu_pd(dx + row + x,
                                 _mm256_add_pd(_mm256_add_pd(ax, cx), bx));

                const __m256d ay = _mm256_sub_pd(rmxm, rpxm);
                const __m256d by = _mm256_mul_pd(two, _mm256_sub_pd(rmx0, rpx0));
                const __m256d cy = _mm256_sub_pd(rmxp, rpxp);
                _mm256_storeu_pd(dy + row + x,
                                 _mm256_add_pd(_mm256_add_pd(ay, cy), by));
            }
        }
        for (; x < w; ++x) {
            dx[row + x] = ref::sobel_dx_at(src, w, h, x, y);
            dy[row + x] = ref::sobel_dy_at(src, w, h, x, y);
        }
    }
}

void magnitude_avx2(const double* dx, const double* dy, double* mag,
                    std::size_t n) {
    std::size_t i = 0;
    for (; i + 3 < n; i += 4) {
        const __m256d vx = _mm256_loadu_pd(dx + i);
        const __m256d vy = _mm256_loadu_pd(dy + i);
        const __m256d sum =
            _mm256_add_pd(_mm256_mul_pd(vx, vx), _mm256_mul_pd(vy, vy));
        _mm256_storeu_pd(mag + i, _mm256_sqrt_pd(sum));
    }
    for (; i < n; ++i) {
        mag[i] = ref::magnitude_at(dx[i], dy[i]);
    }
}

void nearest_avx2(const double* r, const double* g, const double* b,
                  std::size_t n, const double* cr, const double* cg,
                  const double* cb, int k, std::uint32_t* assign,
                  double* dist2) {
    std::size_t i = 0;
    for (; i + 3 < n; i += 4) {
        const __m256d vr = _mm256_loadu_pd(r + i);
        const __m256d vg = _mm256_loadu_pd(g + i);
        const __m256d vb = _mm256_loadu_pd(b + i);

        __m256d best = _mm256_set1_pd(std::numeric_limits<double>::infinity());
        __m256d best_index = _mm256_setzero_pd();
        for (int c = 0; c < k; ++c) {
            const __m256d dr = _mm256_sub_pd(vr, _mm256_set1_pd(cr[c]));
            const __m256d dg = _mm256_sub_pd(vg, _mm256_set1_pd(cg[c]));
            const __m256d db = _mm256_sub_pd(vb, _mm256_set1_pd(cb[c]));
            const __m256d d = _mm256_add_pd(
                _mm256_add_pd(_mm256_mul_pd(dr, dr), _mm256_mul_pd(dg, dg)),
                _mm256_mul_pd(db, db));
            const __m256d lt = _mm256_cmp_pd(d, best, _CMP_LT_OQ);
            best = _mm256_blendv_pd(best, d, lt);
            best_index = _mm256_blendv_pd(best_index,
                                          _mm256_set1_pd(static_cast<double>(c)), lt);
        }
        _mm256_storeu_pd(dist2 + i, best);
        const __m128i idx = _mm256_cvttpd_epi32(best_index);
        _mm_storeu_si128(reinterpret_cast<__m128i*>(assign + i), idx);
    }
    for (; i < n; ++i) {
        ref::nearest_centroid_at(r[i], g[i], b[i], cr, cg, cb, k, &assign[i],
                                 &dist2[i]);
    }
}

}  // namespace

const KernelTable& avx2_table() {
    static const KernelTable table = {
        "avx2",     grayscale_avx2, convolve_avx2, blur3_avx2,
        sobel_avx2, magnitude_avx2, nearest_avx2,
    };
    return table;
}

}  // namespace edgechroma::kernels

#endif  // defined(__x86_64__)
