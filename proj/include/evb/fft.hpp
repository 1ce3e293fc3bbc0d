#pragma once

#include <Eigen/Dense>

namespace evb {

/// In-place centered 2-D DFT with the even-n convention: array index k maps
/// to frequency index (k - n/2), so
///   out[kx,ky] = sum_j in[jx,jy] exp(sign*2*pi*i*((jx-nx/2)(kx-nx/2)/nx
///                                              + (jy-ny/2)(ky-ny/2)/ny)).
/// Unnormalized; requires even nx, ny. sign must be +1 or -1.
void centered_dft2(Eigen::ArrayXXcd& data, int sign, int threads = 1);

/// Plain corner-DC transforms, forward kernel exp(-2*pi*i*j*k/n).
/// ifft2 applies the 1/(nx*ny) factor, so ifft2(fft2(x)) == x.
void fft2(Eigen::ArrayXXcd& data, int threads = 1);
void ifft2(Eigen::ArrayXXcd& data, int threads = 1);

}  // namespace evb
