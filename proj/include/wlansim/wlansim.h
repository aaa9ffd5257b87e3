/*
 * wlansim - baseband link-level simulator for 802.11g (SISO-OFDM) and
 * 802.11n (2x2 Alamouti MIMO-OFDM) under 802.15.4 interference, with
 * closed-form reference curves and a 2.4 GHz spectrum-overlap planner.
 *
 * C API of the shared library. All functions returning wlansim_status set a
 * thread-local message retrievable via wlansim_last_error() on failure.
 * Handles are opaque; every constructor has a matching _free function.
 */
#ifndef WLANSIM_H
#define WLANSIM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define WLANSIM_API __declspec(dllexport)
#else
#define WLANSIM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wlansim_status {
  WLANSIM_OK = 0,
  WLANSIM_ERROR_INVALID_ARGUMENT = 1,
  WLANSIM_ERROR_CONFIG = 2,
  WLANSIM_ERROR_IO = 3,
} wlansim_status;

WLANSIM_API const char* wlansim_version(void);
WLANSIM_API const char* wlansim_status_name(wlansim_status status);
/* Message from the most recent failing call on this thread ("" if none). */
WLANSIM_API const char* wlansim_last_error(void);

/* ------------------------------------------------------------------ */
/* Modulation profiles                                                 */
/* ------------------------------------------------------------------ */

typedef struct wlansim_profile_info {
  char standard; /* 'g' or 'n' */
  int32_t n_fft;
  int32_t n_data_subcarriers;
  int32_t n_spatial_streams;
  int32_t n_cp_samples;
  int32_t bits_per_symbol; /* per modulation block */
  double sample_rate_hz;
  double cp_duration_s;
  double data_symbol_duration_s;
  double phy_bit_rate_bps;
  double es_eb_offset_db; /* Es/N0 = Eb/N0 + offset */
} wlansim_profile_info;

WLANSIM_API wlansim_status wlansim_profile_get(char standard, wlansim_profile_info* out);

/* ------------------------------------------------------------------ */
/* Closed-form curves                                                  */
/* ------------------------------------------------------------------ */

/* 0.5 * erfc(sqrt(Eb/N0)); argument in dB. */
WLANSIM_API double wlansim_ber_bpsk_awgn_db(double ebno_db);
/* PER = 1 - (1 - ber)^packet_bits. */
WLANSIM_API double wlansim_per_from_ber(double ber, uint64_t packet_bits);
/* Goodput: rate * (1 - per). */
WLANSIM_API double wlansim_throughput_bps(double phy_rate_bps, double per);
/* SINR = 10*log10(p_signal / (p_noise + p_interferer)). */
WLANSIM_API wlansim_status wlansim_sinr_db(double p_signal, double p_noise, double p_interferer,
                                           double* out);
/* Reference BER at each Eb/N0 point: the AWGN closed form for 'g', the
 * Rayleigh-averaged 2x2 Alamouti curve (n_draws channel draws) for 'n'. */
WLANSIM_API wlansim_status wlansim_analytic_curve(char standard, const double* ebno_db, size_t n,
                                                  uint64_t n_draws, uint64_t seed, double* ber_out);

/* Expands "start:step:stop" or "a,b,c" into points; *n_out receives the
 * count. Pass out == NULL to query the count only. */
WLANSIM_API wlansim_status wlansim_parse_ebno_range(const char* text, double* out, size_t capacity,
                                                    size_t* n_out);

/* ------------------------------------------------------------------ */
/* Sweep configuration and execution                                   */
/* ------------------------------------------------------------------ */

typedef struct wlansim_config wlansim_config;
typedef struct wlansim_results wlansim_results;

WLANSIM_API wlansim_status wlansim_config_parse(const char* text, wlansim_config** out);
WLANSIM_API wlansim_status wlansim_config_load(const char* path, wlansim_config** out);
/* Presets: fig6 (clean comparison), fig7/fig8/fig9 (periodic interference),
 * fig10 (Poisson arrivals). */
WLANSIM_API wlansim_status wlansim_config_preset(const char* name, wlansim_config** out);
/* Overrides one key, e.g. ("g.max_bits", "1000000") or ("sweep.seed", "7"). */
WLANSIM_API wlansim_status wlansim_config_set(wlansim_config* config, const char* key,
                                              const char* value);
WLANSIM_API void wlansim_config_free(wlansim_config* config);

typedef struct wlansim_metric_record {
  char standard;     /* 'g' or 'n' */
  char scenario[24]; /* "both_interfered" or "n_only" */
  double ebno_db;
  uint64_t bits;
  uint64_t bit_errors;
  uint64_t packets;
  uint64_t packet_errors;
  double ber;
  double per;
  double throughput_bps;
  uint64_t seed;
} wlansim_metric_record;

/* Runs the configured g and n links over the configured points.
 * n_threads <= 0 selects the hardware concurrency; results are identical
 * for any thread count. */
WLANSIM_API wlansim_status wlansim_sweep_run(const wlansim_config* config, int n_threads,
                                             wlansim_results** out);
WLANSIM_API size_t wlansim_results_count(const wlansim_results* results);
WLANSIM_API wlansim_status wlansim_results_get(const wlansim_results* results, size_t index,
                                               wlansim_metric_record* out);
/* CSV rendering of every record; owned by the results handle. */
WLANSIM_API const char* wlansim_results_csv(const wlansim_results* results);
WLANSIM_API wlansim_status wlansim_results_write_csv(const wlansim_results* results,
                                                     const char* path, int force);
WLANSIM_API void wlansim_results_free(wlansim_results* results);

/* Writes content to path, refusing to overwrite unless force is nonzero. */
WLANSIM_API wlansim_status wlansim_write_file(const char* path, const char* content, int force);

/* ------------------------------------------------------------------ */
/* Spectrum planner                                                    */
/* ------------------------------------------------------------------ */

typedef struct wlansim_wlan_deployment {
  int32_t channel;      /* 1..14 */
  int32_t width_mhz;    /* 22 (20 MHz class) or 40 */
  int32_t extend_below; /* 40 MHz only: nonzero extends downward */
} wlansim_wlan_deployment;

typedef struct wlansim_spectrum_report wlansim_spectrum_report;

WLANSIM_API wlansim_status wlansim_spectrum_plan(const wlansim_wlan_deployment* deployments,
                                                 size_t n, wlansim_spectrum_report** out);
WLANSIM_API const char* wlansim_spectrum_report_text(const wlansim_spectrum_report* report);
WLANSIM_API const char* wlansim_spectrum_report_csv(const wlansim_spectrum_report* report);
WLANSIM_API size_t wlansim_spectrum_free_channel_count(const wlansim_spectrum_report* report);
/* Returns the i-th free zigbee channel number, or -1 when out of range. */
WLANSIM_API int wlansim_spectrum_free_channel_at(const wlansim_spectrum_report* report,
                                                 size_t index);
WLANSIM_API void wlansim_spectrum_report_free(wlansim_spectrum_report* report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* WLANSIM_H */
