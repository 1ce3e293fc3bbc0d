#include "evb/fft.hpp"

#include <stdexcept>
#include <vector>

#include <unsupported/Eigen/FFT>

#include "evb/parallel.hpp"

namespace evb {

namespace {

using Eigen::Index;
using Cplx = std::complex<double>;

// Column pass: each column of the (nx, ny) array is contiguous.
void fft_columns(Eigen::ArrayXXcd& a, int threads) {
  const Index nx = a.rows(), ny = a.cols();
  parallel_for(ny, threads, [&](long c0, long c1) {
    Eigen::FFT<double> fft;
    std::vector<Cplx> out(static_cast<size_t>(nx));
    for (long c = c0; c < c1; ++c) {
      fft.fwd(out.data(), a.col(c).data(), nx);
      std::copy(out.begin(), out.end(), a.col(c).data());
    }
  });
}

// Row pass: rows are strided, so stage through a buffer.
void fft_rows(Eigen::ArrayXXcd& a, int threads) {
  const Index nx = a.rows(), ny = a.cols();
  parallel_for(nx, threads, [&](long r0, long r1) {
    Eigen::FFT<double> fft;
    std::vector<Cplx> in(static_cast<size_t>(ny)), out(static_cast<size_t>(ny));
    for (long r = r0; r < r1; ++r) {
      for (Index c = 0; c < ny; ++c) in[static_cast<size_t>(c)] = a(r, c);
      fft.fwd(out.data(), in.data(), ny);
      for (Index c = 0; c < ny; ++c) a(r, c) = out[static_cast<size_t>(c)];
    }
  });
}

// Swap quadrants; for even dimensions fftshift and ifftshift coincide.
void quadrant_swap(Eigen::ArrayXXcd& a) {
  const Index hx = a.rows() / 2, hy = a.cols() / 2;
  a.block(0, 0, hx, hy).swap(a.block(hx, hy, hx, hy));
  a.block(hx, 0, hx, hy).swap(a.block(0, hy, hx, hy));
}

}  // namespace

void fft2(Eigen::ArrayXXcd& data, int threads) {
  fft_columns(data, threads);
  fft_rows(data, threads);
}

void ifft2(Eigen::ArrayXXcd& data, int threads) {
  // conj(fft(conj(x))) / N
  data = data.conjugate();
  fft2(data, threads);
  data = data.conjugate() / static_cast<double>(data.size());
}

void centered_dft2(Eigen::ArrayXXcd& data, int sign, int threads) {
  if (data.rows() % 2 != 0 || data.cols() % 2 != 0)
    throw std::invalid_argument("centered transform requires even grid dimensions");
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("centered transform: sign must be +1 or -1");
  if (sign == 1) data = data.conjugate();
  quadrant_swap(data);
  fft2(data, threads);
  quadrant_swap(data);
  if (sign == 1) data = data.conjugate();
}

}  // namespace evb
