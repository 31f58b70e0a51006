/* tslint:disable */
/* eslint-disable */

export function codeParams(p: number, t: number, m: number, s: number, d: number): string;

export function codePoints(p: number, t: number, m: number, s: number, d: number): Uint32Array;

export function decompose(p: number, t: number, m: number, s: number, d: number, poly: string): string;

export function informationMap(p: number, t: number, m: number, s: number, d: number): Int32Array;

export function slotLabels(p: number, t: number, m: number, s: number, d: number): string[];

export function systematicEncode(p: number, t: number, m: number, s: number, d: number, message: Uint32Array): Uint32Array;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly codeParams: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
    readonly codePoints: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
    readonly decompose: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number, number, number];
    readonly informationMap: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
    readonly slotLabels: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
    readonly systematicEncode: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_drop_slice: (a: number, b: number) => void;
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
