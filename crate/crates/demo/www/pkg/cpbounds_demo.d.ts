/* tslint:disable */
/* eslint-disable */

export class PlanarDemo {
    free(): void;
    [Symbol.dispose](): void;
    advance(dt: number): void;
    coupling_holds(): boolean;
    density(): number;
    log_xi(): Float32Array;
    mean_xi(): number;
    constructor(side: number, lambda: number, a: number, b: number, seed: number);
    occupied(): Uint8Array;
    time(): number;
}

export function bound_row(d: number): Float64Array;

export function l_value(a: number, b: number, gamma: number): number;

export function null_vector_summary(d: number, lambda: number, a: number, b: number, radius: number): Float64Array;

export function origin_curve(d: number, lambda: number, a: number, b: number, radius: number, t_max: number, samples: number): Float64Array;

export function weighted_bound(d: number, a: number, b: number, gamma: number): number | undefined;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_planardemo_free: (a: number, b: number) => void;
    readonly bound_row: (a: number) => [number, number, number, number];
    readonly l_value: (a: number, b: number, c: number) => number;
    readonly null_vector_summary: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
    readonly origin_curve: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number, number, number];
    readonly planardemo_advance: (a: number, b: number) => [number, number];
    readonly planardemo_coupling_holds: (a: number) => number;
    readonly planardemo_density: (a: number) => number;
    readonly planardemo_log_xi: (a: number) => [number, number];
    readonly planardemo_mean_xi: (a: number) => number;
    readonly planardemo_new: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
    readonly planardemo_occupied: (a: number) => [number, number];
    readonly planardemo_time: (a: number) => number;
    readonly weighted_bound: (a: number, b: number, c: number, d: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
