/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_planardemo_free: (a: number, b: number) => void;
export const bound_row: (a: number) => [number, number, number, number];
export const l_value: (a: number, b: number, c: number) => number;
export const null_vector_summary: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
export const origin_curve: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number, number, number];
export const planardemo_advance: (a: number, b: number) => [number, number];
export const planardemo_coupling_holds: (a: number) => number;
export const planardemo_density: (a: number) => number;
export const planardemo_log_xi: (a: number) => [number, number];
export const planardemo_mean_xi: (a: number) => number;
export const planardemo_new: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
export const planardemo_occupied: (a: number) => [number, number];
export const planardemo_time: (a: number) => number;
export const weighted_bound: (a: number, b: number, c: number, d: number) => [number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
