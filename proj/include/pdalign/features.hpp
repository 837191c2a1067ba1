/* Copyright 2026 The pdalign Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#ifndef PDALIGN_FEATURES_HPP_
#define PDALIGN_FEATURES_HPP_

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "pdalign/audio.hpp"
#include "pdalign/errors.hpp"

namespace pdalign {

enum class FeatureKind { kMelspec, kMfcc, kLatent };

std::string feature_kind_name(FeatureKind kind);
FeatureKind feature_kind_from_name(const std::string& name);

// Acoustic feature matrix: N rows (feature dimension) x T columns (frames).
struct FeatureMatrix {
  Eigen::MatrixXd values;
  FeatureKind kind = FeatureKind::kMelspec;
  double frame_hop_seconds = 0.0;
  std::string source_id;

  Eigen::Index dim() const { return values.rows(); }
  Eigen::Index frames() const { return values.cols(); }
};

struct FeatureConfig {
  int sample_rate = 48000;
  int fft_size = 2048;    // must be a power of two
  int hop_length = 512;
  int mel_bands = 80;
  double fmin = 0.0;
  double fmax = 24000.0;  // defaults to sample_rate / 2
  int mfcc_coeffs = 20;
  double log_floor = 1e-10;

  double frame_hop_seconds() const {
    return static_cast<double>(hop_length) / sample_rate;
  }
};

// Throws ConfigError on an invalid combination.
void validate_feature_config(const FeatureConfig& config);

// HTK mel scale.
double hz_to_mel(double hz);
double mel_to_hz(double mel);

// Center frequencies (Hz) of the mel_bands triangular filters.
std::vector<double> mel_filter_centers_hz(const FeatureConfig& config);

// Triangular filterbank, mel_bands x (fft_size/2 + 1), each filter
// peak-normalized to 1 with a single contiguous support interval.
Eigen::MatrixXd mel_filterbank(const FeatureConfig& config);

// Power spectrogram, (fft_size/2 + 1) x T with T = floor(len/hop) + 1.
// Frames are centered via reflect padding of fft_size/2 on both ends and
// weighted by a periodic Hann window; no FFT normalization is applied.
Eigen::MatrixXd stft_power(const AudioBuffer& audio,
                           const FeatureConfig& config);

// ln(max(filterbank * power, log_floor)).
FeatureMatrix melspec(const AudioBuffer& audio, const FeatureConfig& config);

// Orthonormal DCT-II along the mel axis, first mfcc_coeffs rows kept.
FeatureMatrix mfcc(const AudioBuffer& audio, const FeatureConfig& config);

// Orthonormal DCT-II of one vector (exposed for the mfcc definition).
Eigen::VectorXd dct2_orthonormal(const Eigen::VectorXd& x);

// Feature file: magic "FEAT", u8 version, u8 kind, u32 N, u32 T,
// f64 frame_hop_seconds, N*T float32 values frame-major. Values are
// stored at float32 precision; source_id is the file stem.
void save_features(const FeatureMatrix& features, const std::string& path);
FeatureMatrix load_features(const std::string& path);

// load_features restricted to kind == latent (the ingestion point for
// externally produced features).
FeatureMatrix load_latent_features(const std::string& path);

// Per-dimension corpus statistics used to normalize ASR inputs.
struct NormStats {
  Eigen::VectorXd mean;
  Eigen::VectorXd stddev;  // floored at 1e-8
};

NormStats compute_norm_stats(const std::vector<FeatureMatrix>& features);

}  // namespace pdalign

#endif  // PDALIGN_FEATURES_HPP_
