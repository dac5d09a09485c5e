/* tslint:disable */
/* eslint-disable */

/**
 * JSON `{rows, markdown}` for all five families.
 */
export function censusReport(text: string, dual: boolean, min_size: number): string;

/**
 * JSON list of motifs: `[{domain, images, arity, maximal, meaning}]`.
 */
export function findMotifs(text: string, family: string, min_size: number, mode: string, maximal_only: boolean): string;

export function standardScale(family: string, n: number): string;

/**
 * JSON verdict for a `{"map": {...}}` document.
 */
export function verifyMap(context_text: string, scale_text: string, map_text: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly censusReport: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly findMotifs: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number) => [number, number, number, number];
    readonly standardScale: (a: number, b: number, c: number) => [number, number, number, number];
    readonly verifyMap: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
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
